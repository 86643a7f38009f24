/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_GF_HH
#define MINRANK_GUARD_MINRANK_GF_HH 1

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minrank
{
    class FieldError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * An element of GF(p^e), stored as the base-p little-endian packing of
     * its polynomial residue. Element 0 is rep 0 and element 1 is rep 1.
     */
    struct Element
    {
        std::uint32_t rep = 0;

        auto operator<=> (const Element &) const = default;
    };

    /**
     * Field context. Immutable after construction, so one instance can be
     * shared between threads.
     *
     * The modulus is the lexicographically smallest monic irreducible of
     * degree e, comparing coefficient tuples from the constant term upwards.
     * Order is capped at 2^16.
     */
    class Field
    {
        private:
            unsigned _p, _e, _q;
            std::vector<unsigned> _modulus;           // e+1 coefficients, low degree first, monic
            std::vector<std::uint32_t> _exp, _log;    // _exp has 2(q-1) entries
            std::vector<std::uint32_t> _add_table;    // only when q <= 256 and not prime / char 2
            std::vector<std::uint32_t> _neg, _inv;
            std::vector<std::uint32_t> _sqrt;         // q entries; q for "no root"
            std::optional<Element> _nonsquare;

            auto add_by_digits(std::uint32_t a, std::uint32_t b) const -> std::uint32_t;

        public:
            static constexpr unsigned max_order = 1u << 16;

            Field(unsigned p, unsigned e);

            /// Builds GF(q) from "q" or "p^e". Throws FieldError unless q is a prime power.
            static auto from_string(const std::string &) -> Field;
            static auto from_order(unsigned q) -> Field;

            auto characteristic() const -> unsigned { return _p; }
            auto degree() const -> unsigned { return _e; }
            auto order() const -> unsigned { return _q; }
            auto modulus() const -> const std::vector<unsigned> & { return _modulus; }
            auto is_even() const -> bool { return _p == 2; }

            auto zero() const -> Element { return Element{ 0 }; }
            auto one() const -> Element { return Element{ 1 }; }
            auto element(unsigned rep) const -> Element;

            /// Every element, in rep order.
            auto elements() const -> std::vector<Element>;

            auto add(Element a, Element b) const -> Element;
            auto sub(Element a, Element b) const -> Element;
            auto neg(Element a) const -> Element { return Element{ _neg[a.rep] }; }
            auto mul(Element a, Element b) const -> Element;
            auto inv(Element a) const -> Element;
            auto div(Element a, Element b) const -> Element { return mul(a, inv(b)); }
            auto pow(Element a, std::uint64_t n) const -> Element;

            /// Euler's criterion for odd q; always true in characteristic 2.
            auto is_square(Element a) const -> bool;

            /// A root b with b*b == a. Odd q breaks the +-b tie towards the smaller rep.
            auto sqrt(Element a) const -> Element;

            /// The smallest-rep nonsquare. Throws for even q.
            auto find_nonsquare() const -> Element;

            /// First (c, d) in scan order over c with c^2 + d^2 == nu. Odd q only.
            auto sum_of_two_squares(Element nu) const -> std::pair<Element, Element>;

            auto same_as(const Field & other) const -> bool
            {
                return _p == other._p && _e == other._e;
            }
    };

    using FieldPtr = std::shared_ptr<const Field>;

    auto make_field(unsigned p, unsigned e) -> FieldPtr;

    /// Splits q into (p, e) by trial division, or nullopt if q is not a prime power.
    auto prime_power(unsigned q) -> std::optional<std::pair<unsigned, unsigned>>;

    auto is_prime(unsigned n) -> bool;
}

#endif
