#include "zecap/field.hpp"

namespace zecap {

const GfField& GfField::of(int m) {
    // x+1, x^2+x+1, x^3+x+1, x^4+x+1
    static const GfField f1(1, 0b11);
    static const GfField f2(2, 0b111);
    static const GfField f3(3, 0b1011);
    static const GfField f4(4, 0b10011);
    switch (m) {
        case 1: return f1;
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        default: throw std::invalid_argument("GfField: only GF(2^m) with 1 <= m <= 4 is pinned");
    }
}

uint32_t GfField::mul(uint32_t a, uint32_t b) const {
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & order()) a ^= modulus_;
    }
    return r;
}

uint32_t GfField::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("GfField: zero has no inverse");
    // a^(2^m - 2)
    uint32_t r = 1, base = a;
    uint32_t e = order() - 2;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int GfField::trace(uint32_t a) const {
    uint32_t t = 0, x = a;
    for (int i = 0; i < m_; ++i) {
        t ^= x;
        x = mul(x, x);
    }
    if (t > 1) throw std::logic_error("GfField: trace left the prime field");
    return int(t);
}

static void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field == nullptr || b.field == nullptr)
        throw std::invalid_argument("FieldElement: unbound element");
    if (a.field != b.field)
        throw std::invalid_argument("FieldElement: incompatible fields (moduli differ)");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    return FieldElement(coeffs ^ o.coeffs, field);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    return FieldElement(field->mul(coeffs, o.coeffs), field);
}

FieldElement FieldElement::inverse() const {
    return FieldElement(field->inv(coeffs), field);
}

int FieldElement::trace() const { return field->trace(coeffs); }

std::string FieldElement::str() const {
    std::string s(size_t(field->degree()), '0');
    for (int i = 0; i < field->degree(); ++i)
        if ((coeffs >> i) & 1) s[size_t(i)] = '1';
    return s;
}

int sigma_field(const std::pair<FieldElement, FieldElement>& p,
                const std::pair<FieldElement, FieldElement>& q) {
    const auto& [w, x] = p;
    const auto& [y, z] = q;
    check_same_field(w, x);
    check_same_field(y, z);
    check_same_field(w, y);
    return (w * z + x * y).trace();
}

}  // namespace zecap
