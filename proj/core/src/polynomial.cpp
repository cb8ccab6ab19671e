#include "tabkey/polynomial.hpp"

#include <stdexcept>

namespace tabkey {

SparsePolynomial SparsePolynomial::monomial(const Exponent& exponent, Coefficient coefficient) {
    SparsePolynomial p(exponent.size());
    p.add_term(exponent, coefficient);
    return p;
}

Coefficient SparsePolynomial::coefficient(const Exponent& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void SparsePolynomial::check_arity(const Exponent& exponent) const {
    if (exponent.size() != num_variables_) {
        throw std::invalid_argument("polynomial: exponent has " + std::to_string(exponent.size()) +
                                    " components, expected " + std::to_string(num_variables_));
    }
}

void SparsePolynomial::add_term(const Exponent& exponent, Coefficient coefficient) {
    check_arity(exponent);
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    for (const auto& [exponent, c] : other.terms_) {
        add_term(exponent, c);
    }
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    for (const auto& [exponent, c] : other.terms_) {
        add_term(exponent, -c);
    }
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.num_variables_ != b.num_variables_) {
        throw std::invalid_argument("polynomial: variable count mismatch");
    }
    SparsePolynomial out(a.num_variables_);
    Exponent e(a.num_variables_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::swap_variables(std::size_t i) const {
    if (i + 1 >= num_variables_) {
        throw std::out_of_range("polynomial: no variable pair " + std::to_string(i + 1));
    }
    SparsePolynomial out(num_variables_);
    for (const auto& [source, c] : terms_) {
        Exponent exponent = source;
        std::swap(exponent[i], exponent[i + 1]);
        out.add_term(exponent, c);
    }
    return out;
}

std::string SparsePolynomial::to_string() const {
    std::string out;
    for (const auto& [exponent, c] : terms_) {
        out += std::to_string(c);
        for (int e : exponent) {
            out += ' ';
            out += std::to_string(e);
        }
        out += '\n';
    }
    return out;
}

} // namespace tabkey
