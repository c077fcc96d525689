#include "ramsey/cli.hpp"

int main(int argc, char** argv) { return ramsey::run_cli(argc, argv); }
