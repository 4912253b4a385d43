#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace zecap {

class GfField;

// Element of GF(2^m) in polynomial basis; coefficient of x^i is bit i.
struct FieldElement {
    uint32_t coeffs = 0;
    const GfField* field = nullptr;

    FieldElement() = default;
    FieldElement(uint32_t c, const GfField* f) : coeffs(c), field(f) {}

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const { return coeffs == o.coeffs && field == o.field; }
    bool is_zero() const { return coeffs == 0; }

    FieldElement square() const { return *this * *this; }
    FieldElement inverse() const;
    int trace() const;
    std::string str() const;  // coefficients as bit-string, x^0 first
};

// GF(2^m) with a fixed irreducible modulus. Pinned moduli:
//   m=1: x+1, m=2: x^2+x+1, m=3: x^3+x+1, m=4: x^4+x+1
class GfField {
  public:
    static const GfField& of(int m);  // throws for m outside 1..4

    int degree() const { return m_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t order() const { return 1u << m_; }

    FieldElement el(uint32_t coeffs) const {
        if (coeffs >= order()) throw std::invalid_argument("GfField: coefficients out of range");
        return FieldElement(coeffs, this);
    }
    FieldElement zero() const { return el(0); }
    FieldElement one() const { return el(1); }

    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws on zero
    int trace(uint32_t a) const;     // Tr(a) = a + a^2 + ... + a^{2^{m-1}}

  private:
    GfField(int m, uint32_t mod) : m_(m), modulus_(mod) {}
    int m_;
    uint32_t modulus_;
};

// sigma_N((w,x),(y,z)) = Tr(wz + xy); non-degenerate alternating form on F_N^2.
int sigma_field(const std::pair<FieldElement, FieldElement>& p,
                const std::pair<FieldElement, FieldElement>& q);

}  // namespace zecap
