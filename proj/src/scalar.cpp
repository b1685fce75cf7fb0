#include "scalar.hpp"

#include <sstream>

namespace tg {

Rat parse_rat(const std::string& s) {
    auto bad = [&]() { return domain_error("malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    std::string t = s;
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(t);
            return Rat(n);
        }
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        mpz_class n(num), d(den);
        if (d == 0) throw domain_error("zero denominator: '" + s + "'");
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string Scalar::str() const {
    if (mode_ == Mode::exact) return rat_str(q_);
    std::ostringstream os;
    os.precision(17);
    os << d_;
    return os.str();
}

std::optional<mpz_class> cbrt_exact(const mpz_class& n) {
    if (n == 0) return mpz_class(0);
    mpz_class a = abs(n), root;
    mpz_root(root.get_mpz_t(), a.get_mpz_t(), 3);
    if (root * root * root != a) return std::nullopt;
    return n < 0 ? mpz_class(-root) : root;
}

std::optional<Rat> cbrt_exact(const Rat& r) {
    auto num = cbrt_exact(mpz_class(r.get_num()));
    if (!num) return std::nullopt;
    auto den = cbrt_exact(mpz_class(r.get_den()));
    if (!den) return std::nullopt;
    Rat out(*num, *den);
    out.canonicalize();
    return out;
}

std::optional<mpz_class> sqrt_exact(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    mpz_class root = sqrt(n);
    if (root * root != n) return std::nullopt;
    return root;
}

std::optional<Rat> sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto num = sqrt_exact(mpz_class(r.get_num()));
    if (!num) return std::nullopt;
    auto den = sqrt_exact(mpz_class(r.get_den()));
    if (!den) return std::nullopt;
    Rat out(*num, *den);
    out.canonicalize();
    return out;
}

}  // namespace tg
