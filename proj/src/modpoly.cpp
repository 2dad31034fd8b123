#include "weilpoly/modpoly.hpp"

#include <string>

namespace weilpoly {

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t r)
{
    std::uint64_t s = a + b;
    return (s >= r || s < a) ? s - r : s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t r)
{
    return a >= b ? a - b : a + (r - b);
}

void require_same(ModPoly const & a, ModPoly const & b)
{
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("polynomials over F_" + std::to_string(a.modulus())
                              + " and F_" + std::to_string(b.modulus()));
}

} // namespace

ModPoly::ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : r_(modulus), c_(std::move(coeffs))
{
    for (auto & x : c_)
        x %= r_;
    normalize();
}

ModPoly::ModPoly(std::uint64_t modulus, std::initializer_list<long> coeffs)
    : r_(modulus)
{
    auto sr = static_cast<long long>(modulus);
    for (long c : coeffs) {
        long long v = static_cast<long long>(c) % sr;
        if (v < 0)
            v += sr;
        c_.push_back(static_cast<std::uint64_t>(v));
    }
    normalize();
}

void ModPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

ModPoly ModPoly::monic() const
{
    if (is_zero() || leading() == 1)
        return *this;
    std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(leading()), r_);
    ModPoly out = *this;
    for (auto & x : out.c_)
        x = mulmod(x, inv, r_);
    return out;
}

ModPoly ModPoly::derivative() const
{
    if (c_.size() <= 1)
        return ModPoly(r_);
    std::vector<std::uint64_t> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j)
        d[j - 1] = mulmod(c_[j], j % r_, r_);
    return ModPoly(r_, std::move(d));
}

ModPoly operator+(ModPoly const & a, ModPoly const & b)
{
    require_same(a, b);
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = addm(a.coeff(j), b.coeff(j), a.r_);
    return ModPoly(a.r_, std::move(v));
}

ModPoly operator-(ModPoly const & a, ModPoly const & b)
{
    require_same(a, b);
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = subm(a.coeff(j), b.coeff(j), a.r_);
    return ModPoly(a.r_, std::move(v));
}

ModPoly operator*(ModPoly const & a, ModPoly const & b)
{
    require_same(a, b);
    if (a.is_zero() || b.is_zero())
        return ModPoly(a.r_);
    std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = addm(v[i + j], mulmod(a.c_[i], b.c_[j], a.r_), a.r_);
    }
    return ModPoly(a.r_, std::move(v));
}

ModDivision divmod(ModPoly const & a, ModPoly const & b)
{
    require_same(a, b);
    if (b.is_zero())
        throw ZeroPolynomial("division by the zero polynomial over F_"
                             + std::to_string(b.modulus()));
    std::uint64_t r = a.modulus();
    int db = b.degree();
    if (a.degree() < db)
        return { ModPoly(r), a };
    std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(b.leading()), r);
    std::vector<std::uint64_t> rem = a.coeffs();
    std::vector<std::uint64_t> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    auto const & bc = b.coeffs();
    for (int k = a.degree(); k >= db; --k) {
        std::uint64_t top = rem[static_cast<std::size_t>(k)];
        if (top == 0)
            continue;
        std::uint64_t c = mulmod(top, inv, r);
        auto shift = static_cast<std::size_t>(k - db);
        quot[shift] = c;
        for (std::size_t i = 0; i < bc.size(); ++i)
            rem[shift + i] = subm(rem[shift + i], mulmod(c, bc[i], r), r);
    }
    rem.resize(static_cast<std::size_t>(db));
    return { ModPoly(r, std::move(quot)), ModPoly(r, std::move(rem)) };
}

ModPoly operator%(ModPoly const & a, ModPoly const & b)
{
    return divmod(a, b).remainder;
}

ModPoly ff_gcd(ModPoly const & a, ModPoly const & b)
{
    require_same(a, b);
    ModPoly u = a, v = b;
    while (!v.is_zero()) {
        ModPoly t = u % v;
        u = std::move(v);
        v = std::move(t);
    }
    return u.monic();
}

ModPoly powmod(ModPoly const & base, BigInt const & e, ModPoly const & m)
{
    require_same(base, m);
    if (m.degree() < 1)
        throw std::domain_error("powmod: modulus polynomial must be nonconstant");
    if (sgn(e) < 0)
        throw std::domain_error("powmod: negative exponent");
    ModPoly result(m.modulus(), { 1 });
    ModPoly b = base % m;
    auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * b) % m;
    }
    return result % m;
}

bool is_squarefree(ModPoly const & f)
{
    if (f.is_zero())
        throw ZeroPolynomial("is_squarefree of the zero polynomial");
    return ff_gcd(f, f.derivative()).degree() == 0;
}

DegreeProfile distinct_degree_profile(ModPoly const & f_in)
{
    if (f_in.degree() < 1)
        throw std::domain_error("distinct_degree_profile: polynomial must be nonconstant");
    if (!is_squarefree(f_in))
        throw NotSquarefree("distinct_degree_profile: input is not squarefree");
    std::uint64_t r = f_in.modulus();
    ModPoly f = f_in.monic();
    ModPoly const x = ModPoly::x(r);
    ModPoly frob = x;  // x^(r^d) mod f
    DegreeProfile profile;
    BigInt rr(static_cast<unsigned long>(r));
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
        frob = powmod(frob, rr, f);
        ModPoly g = ff_gcd(f, frob - x);
        if (g.degree() > 0) {
            profile.emplace_back(d, static_cast<unsigned>(g.degree()) / d);
            f = divmod(f, g).quotient;
            frob = frob % f;
        }
    }
    if (f.degree() > 0)
        profile.emplace_back(static_cast<unsigned>(f.degree()), 1u);
    return profile;
}

bool is_irreducible_mod(ModPoly const & f)
{
    if (f.degree() < 1)
        return false;
    if (!is_squarefree(f))
        return false;
    auto profile = distinct_degree_profile(f);
    return profile.size() == 1
           && profile.front() == std::pair<unsigned, unsigned>(
                   static_cast<unsigned>(f.degree()), 1u);
}

ModPoly reduce_mod(IntPoly const & f, std::uint64_t r)
{
    BigInt rr(static_cast<unsigned long>(r));
    std::vector<std::uint64_t> v;
    v.reserve(f.coeffs().size());
    for (auto const & c : f.coeffs()) {
        BigInt m;
        mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), rr.get_mpz_t());
        v.push_back(m.get_ui());
    }
    return ModPoly(r, std::move(v));
}

GuerrierResult guerrier_check(std::uint64_t n, std::uint64_t r)
{
    if (r < 2 || !is_prime(r))
        throw std::domain_error("guerrier_check: r must be prime");
    if (n % r == 0)
        throw PrimeDividesIndex(std::to_string(r) + " divides " + std::to_string(n));
    GuerrierResult out;
    out.phi = euler_phi(n);
    out.order = n == 1 ? 1 : multiplicative_order(static_cast<std::int64_t>(r), n);
    out.profile = distinct_degree_profile(reduce_mod(cyclotomic(n), r));
    DegreeProfile expected { { static_cast<unsigned>(out.order),
                               static_cast<unsigned>(out.phi / out.order) } };
    out.holds = out.profile == expected;
    return out;
}

} // namespace weilpoly
