#ifndef QUEUELAY_COMMON_HPP
#define QUEUELAY_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace queuelay {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct GraphError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ConstructionError : Error {
    using Error::Error;
};
struct SizeOverflowError : Error {
    using Error::Error;
};
struct LayoutError : Error {
    using Error::Error;
};
// Queue assignment does not cover exactly the edge set of the graph.
struct CoverageError : Error {
    using Error::Error;
};
struct BoundsError : Error {
    using Error::Error;
};
struct GameError : Error {
    using Error::Error;
};
// Raised when a counting argument that should be impossible to violate fails;
// always indicates an engine bug, never a legal adversary reply.
struct PigeonholeError : Error {
    using Error::Error;
};
struct BudgetError : Error {
    using Error::Error;
};
// Certificate extraction hit an input outside its dichotomy (inconsistent
// depth labels, or a layout that defeats every extraction route).
struct CertificateError : Error {
    using Error::Error;
};
// File could not be read or written.
struct IOError : Error {
    using Error::Error;
};

// Deterministic RNG: std::mt19937_64 is bit-exact across platforms, but the
// standard distributions are not, so we roll our own uniform helpers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64: tiny, seedable, reproducible everywhere
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), unbiased via rejection
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng::below(0)");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t s_;
};

// Exact rational with normalized sign and gcd-reduced representation.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    explicit Rational(long long n) : num(n), den(1) {}

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw Error("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace queuelay

#endif
