/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/gf.hh>

#include <algorithm>
#include <charconv>

using std::optional;
using std::pair;
using std::string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace minrank
{
    namespace
    {
        using Poly = vector<unsigned>;

        auto trim(Poly & a) -> void
        {
            while (! a.empty() && a.back() == 0)
                a.pop_back();
        }

        // remainder of a modulo a monic b, coefficients mod p
        auto poly_mod(Poly a, const Poly & b, unsigned p) -> Poly
        {
            trim(a);
            auto db = b.size() - 1;
            while (a.size() > db) {
                auto lead = a.back();
                auto shift = a.size() - 1 - db;
                for (std::size_t i = 0 ; i <= db ; ++i)
                    a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
                trim(a);
            }
            return a;
        }

        auto unpack(uint32_t rep, unsigned p, unsigned e) -> Poly
        {
            Poly result(e, 0);
            for (unsigned i = 0 ; i < e ; ++i) {
                result[i] = rep % p;
                rep /= p;
            }
            return result;
        }

        auto pack(const Poly & a, unsigned p) -> uint32_t
        {
            uint32_t rep = 0;
            for (auto i = a.size() ; i > 0 ; --i)
                rep = rep * p + a[i - 1];
            return rep;
        }

        // the i-th monic polynomial of the given degree, i read as little-endian base-p digits
        auto monic_from_index(uint64_t index, unsigned degree, unsigned p) -> Poly
        {
            Poly result(degree + 1, 0);
            for (unsigned i = 0 ; i < degree ; ++i) {
                result[i] = index % p;
                index /= p;
            }
            result[degree] = 1;
            return result;
        }

        auto is_irreducible(const Poly & f, unsigned p) -> bool
        {
            unsigned e = f.size() - 1;
            for (unsigned d = 1 ; d <= e / 2 ; ++d) {
                uint64_t count = 1;
                for (unsigned i = 0 ; i < d ; ++i)
                    count *= p;
                for (uint64_t i = 0 ; i < count ; ++i)
                    if (poly_mod(f, monic_from_index(i, d, p), p).empty())
                        return false;
            }
            return true;
        }

        auto distinct_prime_factors(unsigned n) -> vector<unsigned>
        {
            vector<unsigned> result;
            for (unsigned d = 2 ; d * d <= n ; ++d)
                if (n % d == 0) {
                    result.push_back(d);
                    while (n % d == 0)
                        n /= d;
                }
            if (n > 1)
                result.push_back(n);
            return result;
        }
    }

    auto is_prime(unsigned n) -> bool
    {
        if (n < 2)
            return false;
        for (unsigned d = 2 ; d * d <= n ; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    auto prime_power(unsigned q) -> optional<pair<unsigned, unsigned>>
    {
        if (q < 2)
            return std::nullopt;
        unsigned p = 0;
        for (unsigned d = 2 ; d * d <= q ; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        if (0 == p)
            return pair{ q, 1u };
        unsigned e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        if (q != 1)
            return std::nullopt;
        return pair{ p, e };
    }

    Field::Field(unsigned p, unsigned e) :
        _p(p),
        _e(e),
        _q(1)
    {
        if (! is_prime(p))
            throw FieldError{ "field characteristic " + std::to_string(p) + " is not prime" };
        if (e < 1)
            throw FieldError{ "field extension degree must be at least 1" };
        for (unsigned i = 0 ; i < e ; ++i) {
            if (uint64_t{ _q } * p > max_order)
                throw FieldError{ "field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^16" };
            _q *= p;
        }

        // lexicographically smallest monic irreducible, constant term most significant
        uint64_t candidates = _q;
        for (uint64_t i = 0 ; i < candidates ; ++i) {
            Poly f(e + 1, 0);
            auto index = i;
            for (unsigned j = e ; j > 0 ; --j) {
                f[j - 1] = index % p;
                index /= p;
            }
            f[e] = 1;
            if (is_irreducible(f, p)) {
                _modulus = f;
                break;
            }
        }
        if (_modulus.empty())
            throw FieldError{ "no irreducible polynomial found" };

        auto slow_mul = [&] (uint32_t a, uint32_t b) -> uint32_t {
            auto x = unpack(a, p, e), y = unpack(b, p, e);
            Poly z(2 * e, 0);
            for (unsigned i = 0 ; i < e ; ++i)
                for (unsigned j = 0 ; j < e ; ++j)
                    z[i + j] = (z[i + j] + x[i] * y[j]) % p;
            return pack(poly_mod(z, _modulus, p), p);
        };

        // multiplicative generator, for log / antilog tables
        auto factors = distinct_prime_factors(_q - 1);
        auto slow_pow = [&] (uint32_t a, uint64_t n) {
            uint32_t result = 1;
            while (n) {
                if (n & 1)
                    result = slow_mul(result, a);
                a = slow_mul(a, a);
                n >>= 1;
            }
            return result;
        };

        uint32_t generator = 0;
        for (uint32_t g = 1 ; g < _q ; ++g) {
            if (_q == 2) {
                generator = 1;
                break;
            }
            if (std::all_of(factors.begin(), factors.end(), [&] (unsigned r) { return slow_pow(g, (_q - 1) / r) != 1; })) {
                generator = g;
                break;
            }
        }

        _exp.resize(2 * (_q - 1));
        _log.assign(_q, 0);
        uint32_t x = 1;
        for (unsigned i = 0 ; i < _q - 1 ; ++i) {
            _exp[i] = x;
            _exp[i + _q - 1] = x;
            _log[x] = i;
            x = slow_mul(x, generator);
        }

        _neg.resize(_q);
        for (uint32_t a = 0 ; a < _q ; ++a) {
            auto digits = unpack(a, p, e);
            for (auto & d : digits)
                d = (p - d) % p;
            _neg[a] = pack(digits, p);
        }

        if (_p != 2 && _e > 1 && _q <= 256) {
            _add_table.resize(_q * _q);
            for (uint32_t a = 0 ; a < _q ; ++a)
                for (uint32_t b = 0 ; b < _q ; ++b)
                    _add_table[a * _q + b] = add_by_digits(a, b);
        }

        _inv.assign(_q, 0);
        for (uint32_t a = 1 ; a < _q ; ++a)
            _inv[a] = _exp[(_q - 1 - _log[a]) % (_q - 1)];

        // square roots, smallest root wins
        _sqrt.assign(_q, _q);
        for (uint32_t b = 0 ; b < _q ; ++b) {
            auto s = mul(Element{ b }, Element{ b }).rep;
            if (_sqrt[s] == _q)
                _sqrt[s] = b;
        }

        if (_p != 2) {
            for (uint32_t a = 0 ; a < _q ; ++a)
                if (! is_square(Element{ a })) {
                    _nonsquare = Element{ a };
                    break;
                }
        }
    }

    auto Field::from_order(unsigned q) -> Field
    {
        auto pe = prime_power(q);
        if (! pe)
            throw FieldError{ "field order " + std::to_string(q) + " is not a prime power" };
        return Field{ pe->first, pe->second };
    }

    auto Field::from_string(const string & s) -> Field
    {
        auto parse = [&] (std::string_view t) -> unsigned {
            unsigned v = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
                throw FieldError{ "cannot parse field order '" + s + "'" };
            return v;
        };

        auto caret = s.find('^');
        if (caret == string::npos)
            return from_order(parse(s));

        auto p = parse(std::string_view{ s }.substr(0, caret));
        auto e = parse(std::string_view{ s }.substr(caret + 1));
        if (! is_prime(p))
            throw FieldError{ "'" + s + "': base is not prime" };
        return Field{ p, e };
    }

    auto Field::element(unsigned rep) const -> Element
    {
        if (rep >= _q)
            throw FieldError{ "element rep " + std::to_string(rep) + " out of range for GF(" + std::to_string(_q) + ")" };
        return Element{ rep };
    }

    auto Field::elements() const -> vector<Element>
    {
        vector<Element> result;
        result.reserve(_q);
        for (uint32_t a = 0 ; a < _q ; ++a)
            result.push_back(Element{ a });
        return result;
    }

    auto Field::add_by_digits(uint32_t a, uint32_t b) const -> uint32_t
    {
        uint32_t result = 0, scale = 1;
        for (unsigned i = 0 ; i < _e ; ++i) {
            result += ((a % _p + b % _p) % _p) * scale;
            a /= _p;
            b /= _p;
            scale *= _p;
        }
        return result;
    }

    auto Field::add(Element a, Element b) const -> Element
    {
        if (_p == 2)
            return Element{ a.rep ^ b.rep };
        if (_e == 1) {
            auto s = a.rep + b.rep;
            return Element{ s >= _p ? s - _p : s };
        }
        if (! _add_table.empty())
            return Element{ _add_table[a.rep * _q + b.rep] };
        return Element{ add_by_digits(a.rep, b.rep) };
    }

    auto Field::sub(Element a, Element b) const -> Element
    {
        return add(a, neg(b));
    }

    auto Field::mul(Element a, Element b) const -> Element
    {
        if (a.rep == 0 || b.rep == 0)
            return zero();
        if (_e == 1)
            return Element{ static_cast<uint32_t>((uint64_t{ a.rep } * b.rep) % _p) };
        return Element{ _exp[_log[a.rep] + _log[b.rep]] };
    }

    auto Field::inv(Element a) const -> Element
    {
        if (a.rep == 0)
            throw FieldError{ "inversion of zero" };
        return Element{ _inv[a.rep] };
    }

    auto Field::pow(Element a, uint64_t n) const -> Element
    {
        Element result = one();
        while (n) {
            if (n & 1)
                result = mul(result, a);
            a = mul(a, a);
            n >>= 1;
        }
        return result;
    }

    auto Field::is_square(Element a) const -> bool
    {
        if (_p == 2 || a.rep == 0)
            return true;
        return pow(a, (_q - 1) / 2) == one();
    }

    auto Field::sqrt(Element a) const -> Element
    {
        if (_p == 2)
            return pow(a, _q / 2);
        if (_sqrt[a.rep] == _q)
            throw FieldError{ "square root of a nonsquare" };
        return Element{ _sqrt[a.rep] };
    }

    auto Field::find_nonsquare() const -> Element
    {
        if (! _nonsquare)
            throw FieldError{ "no nonsquare exists in characteristic 2" };
        return *_nonsquare;
    }

    auto Field::sum_of_two_squares(Element nu) const -> pair<Element, Element>
    {
        if (_p == 2)
            throw FieldError{ "sum_of_two_squares requires odd characteristic" };
        for (uint32_t c = 0 ; c < _q ; ++c) {
            auto rest = sub(nu, mul(Element{ c }, Element{ c }));
            if (is_square(rest))
                return { Element{ c }, sqrt(rest) };
        }
        throw std::logic_error{ "sum_of_two_squares: no representation found" };
    }

    auto make_field(unsigned p, unsigned e) -> FieldPtr
    {
        return std::make_shared<const Field>(p, e);
    }
}
