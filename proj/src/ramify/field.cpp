#include "ramify/field.hpp"

namespace ramify {

namespace {
thread_local std::int64_t t_modulus = 0;
}

std::int64_t Zp::modulus() {
    if (t_modulus == 0) throw InternalError("GF(p) arithmetic used without an active ZpScope");
    return t_modulus;
}

ZpScope::ZpScope(std::int64_t p) : saved_(t_modulus) {
    if (!is_prime(p)) throw InvalidArgumentError("GF(p) modulus must be a prime >= 2, got " + std::to_string(p));
    t_modulus = p;
}

ZpScope::~ZpScope() { t_modulus = saved_; }

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void validate_field(const FieldSpec& f) {
    if (f.prime == 0) return;
    if (f.prime > (1 << 30)) throw InvalidArgumentError("GF(p) modulus too large");
    if (!is_prime(f.prime)) throw InvalidArgumentError("field must be rational or GF(p) with p prime");
}

}  // namespace ramify
