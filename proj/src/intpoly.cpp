#include "weilpoly/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace weilpoly {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(BigInt c)
{
    return IntPoly(std::vector<BigInt> { std::move(c) });
}

IntPoly IntPoly::monomial(BigInt c, std::size_t degree)
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t k)
{
    std::vector<BigInt> v(k + 1);
    v[k] = 1;
    v[0] -= 1;
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t j) const
{
    return j < coeffs_.size() ? coeffs_[j] : BigInt(0);
}

BigInt const & IntPoly::leading() const
{
    if (coeffs_.empty())
        throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigInt IntPoly::eval(BigInt const & x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        d[j - 1] = coeffs_[j] * static_cast<unsigned long>(j);
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const
{
    BigInt c = 0;
    for (auto const & a : coeffs_) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        if (c == 1)
            break;
    }
    return c;
}

IntPoly IntPoly::primitive_part() const
{
    if (is_zero())
        return {};
    BigInt c = content();
    if (sgn(coeffs_.back()) < 0)
        c = -c;
    IntPoly out = *this;
    if (c != 1) {
        for (auto & a : out.coeffs_)
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    }
    return out;
}

IntPoly IntPoly::compose_power(std::size_t k) const
{
    if (is_zero() || k == 0)
        return k == 0 ? IntPoly::constant(eval(1)) : IntPoly {};
    std::vector<BigInt> v(static_cast<std::size_t>(degree()) * k + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        v[j * k] = coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly & IntPoly::operator+=(IntPoly const & o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        coeffs_[j] += o.coeffs_[j];
    normalize();
    return *this;
}

IntPoly & IntPoly::operator-=(IntPoly const & o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        coeffs_[j] -= o.coeffs_[j];
    normalize();
    return *this;
}

IntPoly & IntPoly::operator*=(BigInt const & c)
{
    for (auto & a : coeffs_)
        a *= c;
    normalize();
    return *this;
}

IntPoly operator-(IntPoly a)
{
    for (auto & c : a.coeffs_)
        c = -c;
    return a;
}

IntPoly operator*(IntPoly const & a, IntPoly const & b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (j)
            out += ',';
        out += coeffs_[j].get_str();
    }
    return out;
}

std::string IntPoly::pretty(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = degree(); j >= 0; --j) {
        BigInt const & c = coeffs_[static_cast<std::size_t>(j)];
        if (sgn(c) == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || j == 0)
            os << mag.get_str();
        if (j >= 1)
            os << var;
        if (j >= 2)
            os << '^' << j;
    }
    return os.str();
}

IntPoly IntPoly::parse(std::string_view text)
{
    std::vector<BigInt> v;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - pos);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
            field.remove_prefix(1);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
            field.remove_suffix(1);
        std::string token(field);
        if (!token.empty() && token.front() == '+')
            token.erase(0, 1);
        bool ok = !token.empty();
        for (std::size_t i = 0; ok && i < token.size(); ++i) {
            char ch = token[i];
            ok = std::isdigit(static_cast<unsigned char>(ch))
                 || (i == 0 && ch == '-' && token.size() > 1);
        }
        if (!ok)
            throw PolyParseError("malformed coefficient '" + std::string(field)
                                 + "' in polynomial '" + std::string(text) + "'");
        v.emplace_back(token, 10);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return IntPoly(std::move(v));
}

IntPoly scale(IntPoly f, BigInt const & c)
{
    return f *= c;
}

IntPoly pow(IntPoly const & f, unsigned e)
{
    IntPoly result = IntPoly::constant(1);
    IntPoly base = f;
    for (; e; e >>= 1) {
        if (e & 1)
            result = result * base;
        if (e > 1)
            base = base * base;
    }
    return result;
}

PolyDivision divmod_monic(IntPoly const & a, IntPoly const & m)
{
    if (!m.is_monic())
        throw InexactDivision("divmod_monic: divisor is not monic");
    int dm = m.degree();
    if (a.degree() < dm)
        return { {}, a };
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - dm) + 1);
    auto mc = m.coeffs();
    for (int k = a.degree(); k >= dm; --k) {
        BigInt c = r[static_cast<std::size_t>(k)];
        if (sgn(c) == 0)
            continue;
        std::size_t shift = static_cast<std::size_t>(k - dm);
        quot[shift] = c;
        for (std::size_t i = 0; i < mc.size(); ++i)
            mpz_submul(r[shift + i].get_mpz_t(), c.get_mpz_t(), mc[i].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(dm));
    return { IntPoly(std::move(quot)), IntPoly(std::move(r)) };
}

IntPoly pseudo_remainder(IntPoly const & a, IntPoly const & b)
{
    if (b.is_zero())
        throw ZeroPolynomial("pseudo_remainder by the zero polynomial");
    int db = b.degree();
    if (a.degree() < db)
        return a;
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    BigInt const & lb = b.leading();
    auto bc = b.coeffs();
    int e = a.degree() - db + 1;
    for (int k = a.degree(); k >= db; --k) {
        BigInt c = r[static_cast<std::size_t>(k)];
        for (auto & x : r)
            x *= lb;
        --e;
        if (sgn(c) == 0)
            continue;
        std::size_t shift = static_cast<std::size_t>(k - db);
        for (std::size_t i = 0; i < bc.size(); ++i)
            mpz_submul(r[shift + i].get_mpz_t(), c.get_mpz_t(), bc[i].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(db));
    IntPoly out(std::move(r));
    if (e > 0) {
        BigInt factor;
        mpz_pow_ui(factor.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        out *= factor;
    }
    return out;
}

IntPoly exact_divide(IntPoly const & a, IntPoly const & b)
{
    if (b.is_zero())
        throw ZeroPolynomial("exact_divide by the zero polynomial");
    if (a.is_zero())
        return {};
    int db = b.degree();
    if (a.degree() < db)
        throw InexactDivision("exact_divide: divisor has larger degree");
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    BigInt const & lb = b.leading();
    auto bc = b.coeffs();
    for (int k = a.degree(); k >= db; --k) {
        BigInt & top = r[static_cast<std::size_t>(k)];
        if (sgn(top) == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw InexactDivision("exact_divide: quotient is not integral");
        BigInt c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        std::size_t shift = static_cast<std::size_t>(k - db);
        quot[shift] = c;
        for (std::size_t i = 0; i < bc.size(); ++i)
            mpz_submul(r[shift + i].get_mpz_t(), c.get_mpz_t(), bc[i].get_mpz_t());
    }
    for (auto const & x : r) {
        if (sgn(x) != 0)
            throw InexactDivision("exact_divide: nonzero remainder");
    }
    return IntPoly(std::move(quot));
}

IntPoly gcd(IntPoly const & a, IntPoly const & b)
{
    if (a.is_zero())
        return b.primitive_part() * b.content();
    if (b.is_zero())
        return a.primitive_part() * a.content();
    BigInt c;
    BigInt ca = a.content(), cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree())
        std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part() * c;
}

IntPoly radical(IntPoly const & a)
{
    if (a.degree() <= 0)
        return a.primitive_part();
    IntPoly pp = a.primitive_part();
    IntPoly common = gcd(pp, pp.derivative());
    return exact_divide(pp, common).primitive_part();
}

static BigInt power(BigInt const & base, unsigned long e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

BigInt sylvester_resultant(IntPoly const & a_in, IntPoly const & b_in)
{
    if (a_in.is_zero() || b_in.is_zero())
        return 0;
    int da = a_in.degree(), db = b_in.degree();
    if (da == 0)
        return power(a_in.leading(), static_cast<unsigned long>(db));
    if (db == 0)
        return power(b_in.leading(), static_cast<unsigned long>(da));

    // Subresultant pseudo-remainder sequence.
    IntPoly a = a_in, b = b_in;
    int sign = 1;
    if (da < db) {
        std::swap(a, b);
        if ((da & 1) && (db & 1))
            sign = -sign;
    }
    BigInt ca = a.content(), cb = b.content();
    BigInt t = power(ca, static_cast<unsigned long>(b.degree()))
               * power(cb, static_cast<unsigned long>(a.degree()));
    auto divide_scalar = [](IntPoly const & p, BigInt const & s) {
        std::vector<BigInt> v(p.coeffs().begin(), p.coeffs().end());
        for (auto & x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
        return IntPoly(std::move(v));
    };
    a = divide_scalar(a, ca);
    b = divide_scalar(b, cb);

    BigInt g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1))
            sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero())
            return 0;
        b = divide_scalar(r, g * power(h, static_cast<unsigned long>(delta)));
        g = a.leading();
        if (delta > 0) {
            BigInt num = power(g, static_cast<unsigned long>(delta));
            BigInt den = power(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0)
            break;
    }
    BigInt num = power(b.leading(), static_cast<unsigned long>(a.degree()));
    BigInt den = power(h, static_cast<unsigned long>(a.degree() - 1));
    BigInt last;
    mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt out = t * last;
    return sign < 0 ? BigInt(-out) : out;
}

BigInt resultant(IntPoly const & f, IntPoly const & h)
{
    if (f.is_zero() || h.is_zero())
        throw ZeroPolynomial("resultant with the zero polynomial");
    return sylvester_resultant(h, f);
}

IntPoly cyclotomic(std::uint64_t n)
{
    if (n == 0)
        throw std::domain_error("cyclotomic: index must be positive");
    // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
    auto factors = factorize(n);
    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    std::size_t k = factors.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        std::uint64_t squarefree = 1;
        int parity = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) {
                squarefree *= factors[i].first;
                parity ^= 1;
            }
        }
        IntPoly term = IntPoly::x_pow_minus_one(n / squarefree);
        if (parity)
            den = den * term;
        else
            num = num * term;
    }
    return exact_divide(num, den);
}

IntPoly char_poly_of_power(IntPoly const & f, std::uint64_t d)
{
    if (!f.is_monic())
        throw std::domain_error("char_poly_of_power: polynomial must be monic");
    if (d == 0)
        throw std::domain_error("char_poly_of_power: exponent must be positive");
    auto n = static_cast<std::size_t>(f.degree());
    if (n == 0)
        return IntPoly::constant(1);

    // y^d mod f; Res_y(f, x - y^d) only depends on y^d modulo f.
    IntPoly reduced = IntPoly::constant(1);
    IntPoly base = IntPoly::monomial(1, 1);
    for (std::uint64_t e = d; e; e >>= 1) {
        if (e & 1)
            reduced = divmod_monic(reduced * base, f).remainder;
        if (e > 1)
            base = divmod_monic(base * base, f).remainder;
    }

    // P(k) = prod (k - theta^d) at k = 0..n-1, then interpolate P - x^n.
    std::vector<BigInt> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntPoly shifted = IntPoly::constant(BigInt(static_cast<unsigned long>(k))) - reduced;
        values[k] = sylvester_resultant(f, shifted)
                    - power(BigInt(static_cast<unsigned long>(k)), n);
    }
    // Newton forward differences on the nodes 0..n-1.
    std::vector<BigInt> diffs = values;
    std::vector<BigInt> leading_diffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        leading_diffs[i] = diffs[0];
        for (std::size_t j = 0; j + 1 < n - i; ++j)
            diffs[j] = diffs[j + 1] - diffs[j];
    }
    // sum_i D_i * x(x-1)...(x-i+1) / i!, accumulated with the common
    // denominator (n-1)!.
    BigInt denom;
    mpz_fac_ui(denom.get_mpz_t(), n - 1);
    IntPoly acc;
    IntPoly falling = IntPoly::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt fact_i;
        mpz_fac_ui(fact_i.get_mpz_t(), i);
        BigInt weight;
        mpz_divexact(weight.get_mpz_t(), denom.get_mpz_t(), fact_i.get_mpz_t());
        acc += falling * (leading_diffs[i] * weight);
        falling = falling * IntPoly { -static_cast<long>(i), 1 };
    }
    std::vector<BigInt> coeffs(n + 1);
    auto ac = acc.coeffs();
    for (std::size_t j = 0; j < ac.size(); ++j) {
        if (!mpz_divisible_p(ac[j].get_mpz_t(), denom.get_mpz_t()))
            throw InexactDivision("char_poly_of_power: non-integral interpolant");
        mpz_divexact(coeffs[j].get_mpz_t(), ac[j].get_mpz_t(), denom.get_mpz_t());
    }
    coeffs[n] = 1;
    return IntPoly(std::move(coeffs));
}

IntPoly minimal_poly_of_power(IntPoly const & f, std::uint64_t d)
{
    return radical(char_poly_of_power(f, d));
}

QPolynomial check_q_symmetry(IntPoly f, unsigned g, BigInt q)
{
    int two_g = static_cast<int>(2 * g);
    if (g == 0)
        throw ShapeMismatch(0, "g must be positive");
    if (q < 1)
        throw ShapeMismatch(0, "q must be positive");
    if (f.degree() != two_g)
        throw ShapeMismatch(two_g, "degree " + std::to_string(f.degree())
                                           + " differs from 2g = " + std::to_string(two_g));
    if (!f.is_monic())
        throw ShapeMismatch(two_g, "polynomial is not monic");
    BigInt qpow = power(q, g);
    for (unsigned j = 0; j < g; ++j) {
        if (f.coeff(j) != qpow * f.coeff(2 * g - j))
            throw ShapeMismatch(static_cast<int>(j),
                                "coefficient of t^" + std::to_string(j)
                                        + " is not q^" + std::to_string(g - j)
                                        + " times the coefficient of t^"
                                        + std::to_string(2 * g - j));
        mpz_divexact(qpow.get_mpz_t(), qpow.get_mpz_t(), q.get_mpz_t());
    }
    return QPolynomial(std::move(f), g, std::move(q));
}

} // namespace weilpoly
