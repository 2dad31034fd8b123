#pragma once

// Aberth-Ehrlich iteration shared by the root oracle and the root-subset
// factor search.

#include <vector>

#include "mpreal.hpp"
#include "weilpoly/intpoly.hpp"

namespace weilpoly::detail {

class AberthSolver {
public:
    AberthSolver(IntPoly const & f, unsigned precision_bits);

    /// Iterates until every root is frozen or the sweep cap is reached;
    /// returns whether every root meets the residual certificate.
    bool run();
    bool certified() const;

    std::vector<MpComplex> const & roots() const { return z_; }
    unsigned sweeps() const { return sweeps_; }
    mpfr_prec_t prec() const { return prec_; }
    std::size_t degree() const { return a_.size() - 1; }

private:
    void evaluate(MpComplex const & z, MpComplex & p, MpComplex & dp) const;
    /// sum |a_i| r^i, the scale for a backward-error residual test.
    MpReal magnitude(MpReal const & r) const;

    mpfr_prec_t prec_;
    unsigned bits_;
    std::vector<MpReal> a_, abs_a_;
    double radius_ = 1.0;
    std::vector<MpComplex> z_;
    unsigned sweeps_ = 0;
};

} // namespace weilpoly::detail
