#pragma once

#include <map>
#include <vector>

#include "simplexbound/numeric.hpp"
#include "simplexbound/unipoly.hpp"

namespace simplexbound {

// Graded lexicographic order, descending: higher total degree first, lex ties.
// Gives every polynomial one canonical term sequence for printing and hashing.
struct GradedLexDesc {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned long da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over Z. Exponent vectors have fixed length
// nvars; zero coefficients are never stored.
class MultiPoly {
  public:
    using TermMap = std::map<std::vector<unsigned>, Int, GradedLexDesc>;

    explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}
    static MultiPoly constant(unsigned nvars, const Int& c);
    static MultiPoly variable(unsigned nvars, unsigned i);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == std::vector<unsigned>(nvars_, 0)); }
    // value of a constant polynomial (0 for the zero polynomial)
    Int constant_value() const;
    std::size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    // accumulates c * X^exps; removes the term if the sum cancels
    void add_term(const std::vector<unsigned>& exps, const Int& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Int& s) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

    MultiPoly pow(unsigned long e) const;
    MultiPoly partial(unsigned i) const;

    long total_degree() const;
    unsigned long poly_bitsize() const;

    Rat eval(const std::vector<Rat>& x) const;

    // requires nvars == 1 or a constant polynomial
    UniPoly to_unipoly() const;
    static MultiPoly from_unipoly(const UniPoly& p);

  private:
    void check_same_space(const MultiPoly& o) const;
    unsigned nvars_;
    TermMap t_;
};

}  // namespace simplexbound
