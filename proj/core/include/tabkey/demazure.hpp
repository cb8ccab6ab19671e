#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabkey/polynomial.hpp"
#include "tabkey/tableau.hpp"

namespace tabkey {

class DemazureError : public std::runtime_error {
public:
    enum class Kind { EmptyComposition, BadDimensions };
    DemazureError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Weak composition (a_1, ..., a_n): a rearrangement of a partition padded
/// with zeros.
struct Composition {
    std::vector<int> parts;

    /// Parts sorted decreasingly with zeros dropped.
    std::vector<int> partition() const;
};

/// A permutation of {1, ..., n} in one-line notation.
using Permutation = std::vector<int>;

/// Throws BadDimensions unless `w` is a permutation of 1..w.size().
void check_permutation(const Permutation& w);

/// w·mu: the composition c with c[w(i)] = mu[i] (1-based), mu padded with
/// zeros to length n = w.size().
Composition act(const Permutation& w, const std::vector<int>& mu);

/// The key whose weight is `c`: column j holds {i : c_i >= j}. The entry
/// bound is the number of parts. Throws EmptyComposition if every part is 0.
Tableau key_of_composition(const Composition& c);

/// Which right-key routine filters the tableaux.
enum class KeyEngine { Scan, Oracle };

/// Sum of x^weight(T) over tableaux T of shape mu (a partition, row
/// lengths) with entries <= n whose right key is entrywise <= the key of
/// w·mu. `w` is a permutation of 1..n.
SparsePolynomial demazure_character(const std::vector<int>& mu, const Permutation& w, int n,
                                    KeyEngine engine = KeyEngine::Scan);

/// Isobaric divided difference in variables i, i+1 (0-based):
/// (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}).
SparsePolynomial demazure_operator(const SparsePolynomial& f, std::size_t i);

enum class DescentChoice { First, Last };

/// A reduced word (1-based simple transposition indices) for w, built by
/// peeling off right descents. w = s_{word[0]} s_{word[1]} ...
std::vector<int> reduced_word(const Permutation& w, DescentChoice choice = DescentChoice::First);

/// Every reduced word of w. Exponential; meant for small n.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

/// Applies the operators of a reduced word of w, right to left, to x^mu.
SparsePolynomial demazure_operator_recursion(const std::vector<int>& mu, const Permutation& w,
                                             int n);
/// Same along an explicit word of 1-based simple transposition indices.
SparsePolynomial demazure_operator_word(const std::vector<int>& mu, const std::vector<int>& word,
                                        int n);

/// Sum of x^weight(T) over all tableaux of shape mu with entries <= n.
SparsePolynomial schur_polynomial(const std::vector<int>& mu, int n);

/// The longest element (n, n-1, ..., 1).
Permutation longest_permutation(int n);

} // namespace tabkey
