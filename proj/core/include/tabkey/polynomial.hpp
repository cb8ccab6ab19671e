#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace tabkey {

using Exponent = std::vector<int>;
using Coefficient = std::int64_t;

/// Integer polynomial in a fixed number of variables, stored as a map from
/// exponent vectors to nonzero coefficients. Iteration runs over exponent
/// vectors in descending lexicographic order.
class SparsePolynomial {
public:
    using Terms = std::map<Exponent, Coefficient, std::greater<>>;

    explicit SparsePolynomial(std::size_t num_variables = 0) : num_variables_(num_variables) {}

    static SparsePolynomial monomial(const Exponent& exponent, Coefficient coefficient = 1);

    std::size_t num_variables() const noexcept { return num_variables_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coefficient coefficient(const Exponent& exponent) const;

    void add_term(const Exponent& exponent, Coefficient coefficient);

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        return a += b;
    }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        return a -= b;
    }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

    /// Exchanges variables i and i+1 (0-based).
    SparsePolynomial swap_variables(std::size_t i) const;

    /// "coefficient e_1 ... e_n" per line, descending exponent order.
    std::string to_string() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    void check_arity(const Exponent& exponent) const;

    std::size_t num_variables_;
    Terms terms_;
};

} // namespace tabkey
