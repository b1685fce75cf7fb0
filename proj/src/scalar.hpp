#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tg {

enum class Mode { exact, approx };

struct mode_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct param_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Used by the JSON loaders and CLI parameter lists.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

// Exact integer cube root: returns t with t^3 == n, if it exists.
std::optional<mpz_class> cbrt_exact(const mpz_class& n);
std::optional<Rat> cbrt_exact(const Rat& r);
std::optional<mpz_class> sqrt_exact(const mpz_class& n);
std::optional<Rat> sqrt_exact(const Rat& r);

// A scalar tagged with its arithmetic mode. Matrices and brackets keep a single
// mode for all entries; this type carries individual values across the API.
class Scalar {
public:
    Scalar() : mode_(Mode::exact), q_(0), d_(0) {}

    static Scalar exact(Rat v) {
        Scalar s;
        s.mode_ = Mode::exact;
        s.q_ = std::move(v);
        return s;
    }
    static Scalar exact(long num, long den = 1) { return exact(rat(num, den)); }
    static Scalar approx(double v) {
        Scalar s;
        s.mode_ = Mode::approx;
        s.d_ = v;
        return s;
    }

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::exact; }

    const Rat& q() const {
        if (mode_ != Mode::exact) throw mode_error("exact value requested from approx scalar");
        return q_;
    }
    double d() const {
        if (mode_ != Mode::approx) throw mode_error("approx value requested from exact scalar");
        return d_;
    }
    double as_double() const { return mode_ == Mode::exact ? q_.get_d() : d_; }

    bool is_zero() const { return mode_ == Mode::exact ? q_ == 0 : d_ == 0.0; }

    std::string str() const;

private:
    Mode mode_;
    Rat q_;
    double d_;
};

// Deterministic PRNG (splitmix64) for seeded sampling; not security relevant.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    // small rational with numerator in [-mag, mag], denominator in [1, dmax]
    Rat small_rat(long mag = 3, long dmax = 3) { return rat(range(-mag, mag), range(1, dmax)); }
    Rat small_rat_nonzero(long mag = 3, long dmax = 3) {
        for (;;) {
            Rat r = small_rat(mag, dmax);
            if (r != 0) return r;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace tg
