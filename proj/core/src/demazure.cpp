#include "tabkey/demazure.hpp"

#include <algorithm>
#include <functional>

#include "tabkey/enumerate.hpp"
#include "tabkey/jdt.hpp"
#include "tabkey/scanning.hpp"

namespace tabkey {

namespace {

DemazureError bad(const std::string& what) {
    return DemazureError(DemazureError::Kind::BadDimensions, what);
}

void check_partition(const std::vector<int>& mu, int n) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0 || (i > 0 && mu[i] > mu[i - 1])) {
            throw bad("mu must be a weakly decreasing sequence of nonnegative integers");
        }
    }
    const auto nonzero = std::count_if(mu.begin(), mu.end(), [](int p) { return p > 0; });
    if (n < 1 || nonzero > n) {
        throw bad("mu has " + std::to_string(nonzero) + " nonzero parts but n = " +
                  std::to_string(n));
    }
}

Exponent padded(const std::vector<int>& mu, int n) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < mu.size() && i < e.size(); ++i) {
        e[i] = mu[i];
    }
    return e;
}

Shape shape_of(const std::vector<int>& mu) { return Shape::from_rows(mu); }

SparsePolynomial weight_sum(const std::vector<int>& mu, int n,
                            const std::function<bool(const Tableau&)>& keep) {
    SparsePolynomial out(static_cast<std::size_t>(n));
    for_each_tableau(shape_of(mu), n, [&](const Tableau& t) {
        if (keep(t)) {
            out.add_term(weight(t), 1);
        }
    });
    return out;
}

} // namespace

std::vector<int> Composition::partition() const {
    std::vector<int> out;
    for (int p : parts) {
        if (p > 0) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

void check_permutation(const Permutation& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w) {
        if (v < 1 || static_cast<std::size_t>(v) > w.size() || seen[static_cast<std::size_t>(v)]) {
            throw bad("w must be a permutation of 1.." + std::to_string(w.size()));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Composition act(const Permutation& w, const std::vector<int>& mu) {
    check_permutation(w);
    const int n = static_cast<int>(w.size());
    check_partition(mu, n);
    const Exponent padded_mu = padded(mu, n);
    Composition c;
    c.parts.assign(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        c.parts[static_cast<std::size_t>(w[i] - 1)] = padded_mu[i];
    }
    return c;
}

Tableau key_of_composition(const Composition& c) {
    for (int p : c.parts) {
        if (p < 0) {
            throw bad("composition parts must be nonnegative");
        }
    }
    const int width = c.parts.empty() ? 0 : *std::max_element(c.parts.begin(), c.parts.end());
    if (width == 0) {
        throw DemazureError(DemazureError::Kind::EmptyComposition,
                            "composition has no positive part");
    }
    std::vector<Column> columns;
    for (int j = 1; j <= width; ++j) {
        Column column;
        for (std::size_t i = 0; i < c.parts.size(); ++i) {
            if (c.parts[i] >= j) {
                column.push_back(static_cast<Entry>(i + 1));
            }
        }
        columns.push_back(std::move(column));
    }
    return Tableau(std::move(columns), static_cast<Entry>(c.parts.size()));
}

SparsePolynomial demazure_character(const std::vector<int>& mu, const Permutation& w, int n,
                                    KeyEngine engine) {
    if (static_cast<int>(w.size()) != n) {
        throw bad("w has " + std::to_string(w.size()) + " letters but n = " + std::to_string(n));
    }
    const Composition c = act(w, mu);
    if (c.partition().empty()) {
        return SparsePolynomial::monomial(Exponent(static_cast<std::size_t>(n), 0));
    }
    const Tableau bound_key = key_of_composition(c);
    return weight_sum(mu, n, [&](const Tableau& t) {
        const Tableau right = engine == KeyEngine::Scan ? scanning_tableau(t) : right_key_oracle(t);
        return entrywise_leq(right, bound_key);
    });
}

SparsePolynomial demazure_operator(const SparsePolynomial& f, std::size_t i) {
    if (i + 1 >= f.num_variables()) {
        throw bad("no variables " + std::to_string(i + 1) + ", " + std::to_string(i + 2));
    }
    // Closed form on x_i^p x_{i+1}^q:
    //   p >= q     :  sum_{t=0}^{p-q} x_i^{p-t} x_{i+1}^{q+t}
    //   p == q - 1 :  0
    //   p <  q - 1 : -sum_{t=0}^{q-p-2} x_i^{q-1-t} x_{i+1}^{p+1+t}
    SparsePolynomial out(f.num_variables());
    for (const auto& [exponent, c] : f.terms()) {
        Exponent e = exponent;
        const int p = exponent[i];
        const int q = exponent[i + 1];
        if (p >= q) {
            for (int t = 0; t <= p - q; ++t) {
                e[i] = p - t;
                e[i + 1] = q + t;
                out.add_term(e, c);
            }
        } else {
            for (int t = 0; t <= q - p - 2; ++t) {
                e[i] = q - 1 - t;
                e[i + 1] = p + 1 + t;
                out.add_term(e, -c);
            }
        }
    }
    return out;
}

std::vector<int> reduced_word(const Permutation& w, DescentChoice choice) {
    check_permutation(w);
    Permutation v = w;
    std::vector<int> peeled;
    while (true) {
        int descent = -1;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                descent = static_cast<int>(i);
                if (choice == DescentChoice::First) {
                    break;
                }
            }
        }
        if (descent < 0) {
            break;
        }
        // v s_i has one fewer inversion.
        std::swap(v[static_cast<std::size_t>(descent)], v[static_cast<std::size_t>(descent) + 1]);
        peeled.push_back(descent + 1);
    }
    // w s_{a1} ... s_{ar} = id, so w = s_{ar} ... s_{a1}.
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

namespace {

void collect_words(Permutation& v, std::vector<int>& suffix,
                   std::vector<std::vector<int>>& out) {
    bool any = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1]) {
            any = true;
            std::swap(v[i], v[i + 1]);
            suffix.push_back(static_cast<int>(i + 1));
            collect_words(v, suffix, out);
            suffix.pop_back();
            std::swap(v[i], v[i + 1]);
        }
    }
    if (!any) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
    }
}

} // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    check_permutation(w);
    Permutation v = w;
    std::vector<int> suffix;
    std::vector<std::vector<int>> out;
    collect_words(v, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

SparsePolynomial demazure_operator_recursion(const std::vector<int>& mu, const Permutation& w,
                                             int n) {
    if (static_cast<int>(w.size()) != n) {
        throw bad("w has " + std::to_string(w.size()) + " letters but n = " + std::to_string(n));
    }
    check_permutation(w);
    return demazure_operator_word(mu, reduced_word(w), n);
}

SparsePolynomial demazure_operator_word(const std::vector<int>& mu, const std::vector<int>& word,
                                        int n) {
    check_partition(mu, n);
    SparsePolynomial f = SparsePolynomial::monomial(padded(mu, n));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 1 || *it >= n) {
            throw bad("reduced word letter " + std::to_string(*it) + " out of range");
        }
        f = demazure_operator(f, static_cast<std::size_t>(*it - 1));
    }
    return f;
}

SparsePolynomial schur_polynomial(const std::vector<int>& mu, int n) {
    check_partition(mu, n);
    return weight_sum(mu, n, [](const Tableau&) { return true; });
}

Permutation longest_permutation(int n) {
    Permutation w;
    for (int v = n; v >= 1; --v) {
        w.push_back(v);
    }
    return w;
}

} // namespace tabkey
