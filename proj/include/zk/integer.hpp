/**
 * Arbitrary-precision integer scalar usable inside Eigen matrices.
 *
 * boost::multiprecision::cpp_int cannot be used as an Eigen scalar directly
 * (its byte-container constructor trips Eigen's scalar-promotion traits), so
 * it is wrapped in a small value type with a NumTraits specialization.
 */
#ifndef ZK_INTEGER_HPP
#define ZK_INTEGER_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace zk {

class Integer
{
    public:
        using Rep = boost::multiprecision::cpp_int;

        Integer() = default;
        Integer(int v) : value_(v) {}
        Integer(long v) : value_(v) {}
        Integer(long long v) : value_(v) {}
        explicit Integer(Rep v) : value_(std::move(v)) {}
        explicit Integer(const std::string& digits) : value_(digits) {}

        const Rep& rep() const { return value_; }

        Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
        Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
        Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }
        // Truncating division and remainder, as for built-in integers.
        Integer& operator/=(const Integer& o) { value_ /= o.value_; return *this; }
        Integer& operator%=(const Integer& o) { value_ %= o.value_; return *this; }

        friend Integer operator+(Integer a, const Integer& b) { return a += b; }
        friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
        friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
        friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
        friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
        friend Integer operator-(const Integer& a) { return Integer(Rep(-a.value_)); }

        friend bool operator==(const Integer& a, const Integer& b) { return a.value_ == b.value_; }
        friend std::strong_ordering operator<=>(const Integer& a, const Integer& b)
        {
            int c = a.value_.compare(b.value_);
            return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
        }

        bool is_zero() const { return value_.is_zero(); }
        int sign() const { return value_.sign(); }
        bool fits_int64() const
        {
            return value_ >= std::numeric_limits<std::int64_t>::min()
                && value_ <= std::numeric_limits<std::int64_t>::max();
        }
        std::int64_t to_int64() const { return static_cast<std::int64_t>(value_); }
        std::string str() const { return value_.str(); }

        friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.value_; }

    private:
        Rep value_;
};

inline Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

inline Integer gcd(Integer a, Integer b)
{
    a = abs(a);
    b = abs(b);
    while (!b.is_zero())
    {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Remainder in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r = a % m;
    if (r.sign() < 0)
        r += abs(m);
    return r;
}

}   // namespace zk

namespace Eigen {

template <>
struct NumTraits<zk::Integer> : GenericNumTraits<zk::Integer>
{
    using Real = zk::Integer;
    using NonInteger = zk::Integer;
    using Literal = zk::Integer;
    using Nested = zk::Integer;

    enum
    {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 20,
        MulCost = 40
    };

    static zk::Integer epsilon() { return 0; }
    static zk::Integer dummy_precision() { return 0; }
    static int digits10() { return 0; }
};

}   // namespace Eigen

#endif
