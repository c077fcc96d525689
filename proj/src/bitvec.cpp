#include "ramsey/bitvec.hpp"

#include <cstdlib>

namespace ramsey::kern {

namespace {

const Ops* pick_auto() {
#if defined(RAMSEY_HAVE_AVX2)
    if (avx2_supported()) return &avx2_ops();
#endif
#if defined(RAMSEY_HAVE_NEON)
    return &neon_ops();
#endif
    return &scalar_ops();
}

const Ops* lookup(std::string_view name) {
    if (name == "auto") return pick_auto();
    if (name == "scalar") return &scalar_ops();
#if defined(RAMSEY_HAVE_AVX2)
    if (name == "avx2" && avx2_supported()) return &avx2_ops();
#endif
#if defined(RAMSEY_HAVE_NEON)
    if (name == "neon") return &neon_ops();
#endif
    return nullptr;
}

const Ops*& active() {
    static const Ops* table = [] {
        if (const char* env = std::getenv("RAMSEY_KERNELS")) {
            if (const Ops* t = lookup(env)) return t;
        }
        return pick_auto();
    }();
    return table;
}

}  // namespace

const Ops& ops() { return *active(); }

bool set_backend(std::string_view name) {
    const Ops* t = lookup(name);
    if (!t) return false;
    active() = t;
    return true;
}

std::vector<std::string_view> available_backends() {
    std::vector<std::string_view> v{"scalar"};
#if defined(RAMSEY_HAVE_AVX2)
    if (avx2_supported()) v.push_back("avx2");
#endif
#if defined(RAMSEY_HAVE_NEON)
    v.push_back("neon");
#endif
    return v;
}

}  // namespace ramsey::kern
