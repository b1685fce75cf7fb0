#include "classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace tg {

namespace {

Rat cube(const Rat& r) { return r * r * r; }

void require(bool cond, std::vector<std::string>& violated, const std::string& name) {
    if (!cond) violated.push_back(name);
}

}  // namespace

ConstraintCheck check_family_params(const FamilyParams& p) {
    ConstraintCheck c;
    const auto& L = p.lambdas;
    auto expect_count = [&](size_t n) {
        if (L.size() != n) throw param_error("family parameter count mismatch");
    };
    switch (p.family) {
        case 1: {
            expect_count(3);
            for (int i = 0; i < 3; ++i) require(L[i] != 0, c.violated, "lambda_" + std::to_string(i + 1) + " != 0");
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    require(cube(L[i]) != cube(L[j]), c.violated,
                            "lambda_" + std::to_string(i + 1) + "^3 != lambda_" + std::to_string(j + 1) + "^3");
            Rat s = cube(L[0]) + cube(L[1]) + cube(L[2]);
            Rat prod = cube(L[0]) * cube(L[1]) * cube(L[2]);
            Rat printed = cube(s) - cube(3 * prod);
            Rat homogeneous = cube(s) - 27 * prod;
            c.third_printed_ok = printed != 0;
            c.third_homogeneous_ok = homogeneous != 0;
            c.third_disagree = c.third_printed_ok != c.third_homogeneous_ok;
            if (!c.third_printed_ok && !c.third_homogeneous_ok)
                c.violated.push_back("family-1 third constraint (both readings vanish)");
            break;
        }
        case 2:
            expect_count(2);
            require(L[0] != 0, c.violated, "lambda != 0");
            require(L[1] != 0, c.violated, "mu != 0");
            require(cube(L[0]) + cube(L[1]) != 0, c.violated, "lambda^3 + mu^3 != 0");
            require(cube(L[0]) - cube(L[1]) != 0, c.violated, "lambda^3 - mu^3 != 0");
            break;
        case 3:
            expect_count(2);
            require(L[0] != 0, c.violated, "lambda != 0");
            require(L[1] != 0, c.violated, "mu != 0");
            require(cube(L[0]) - cube(L[1]) != 0, c.violated, "lambda^3 - mu^3 != 0");
            require(cube(L[0]) + 8 * cube(L[1]) != 0, c.violated, "lambda^3 + 8 mu^3 != 0");
            break;
        case 4:
        case 5:
        case 6:
            expect_count(1);
            require(L[0] != 0, c.violated, "lambda != 0");
            break;
        case 7:
            expect_count(0);
            break;
        default:
            throw param_error("family must be 1..7");
    }
    c.ok = c.violated.empty();
    return c;
}

Bracket canonical_semisimple(const FamilyParams& p) {
    ConstraintCheck c = check_family_params(p);
    if (!c.ok) {
        std::string msg = "family " + std::to_string(p.family) + " constraint violated:";
        for (const auto& v : c.violated) msg += " " + v;
        throw param_error(msg);
    }
    const auto& L = p.lambdas;
    switch (p.family) {
        case 1: return l_of(L[0], L[1], L[2]);
        case 2: return l_of(0, L[0], L[1]);
        case 3: return l_of(L[0], L[1], L[1]);
        case 4: return l_of(0, L[0], L[0]);
        case 5: return l_of(0, -L[0], L[0]);
        case 6: return l_of(L[0], 0, 0);
        case 7: return Bracket();
        default: throw param_error("family must be 1..7");
    }
}

std::vector<Bracket> nilpotent_catalog(int family) {
    auto mk = [](std::initializer_list<std::array<int, 4>> terms) {
        Bracket b;
        for (const auto& t : terms) b.set(t[1], t[2], t[3], t[0]);
        return b;
    };
    // terms listed as {coeff, I, i, j}, all 0-based.
    switch (family) {
        case 3:
            return {Bracket(), mk({{-1, 0, 2, 4}, {1, 1, 0, 4}, {-1, 2, 0, 2}})};
        case 4:
            // The printed component pool.
            return {mk({{1, 0, 0, 1}}), mk({{1, 1, 2, 3}}), mk({{-1, 0, 2, 4}}), mk({{1, 1, 0, 4}}),
                    mk({{-1, 2, 0, 2}})};
        case 6:
            return {
                mk({{1, 2, 0, 2}, {1, 2, 1, 3}}),
                mk({{1, 2, 0, 3}, {1, 1, 0, 5}, {1, 2, 1, 2}, {1, 1, 1, 4}, {1, 0, 2, 4}}),
                mk({{1, 2, 0, 3}, {1, 1, 0, 4}, {1, 2, 1, 2}, {1, 0, 2, 5}}),
                mk({{1, 2, 0, 2}, {1, 1, 0, 5}, {1, 2, 1, 3}, {1, 1, 1, 4}}),
            };
        default:
            throw param_error("nilpotent catalog covers families 3, 4 and 6");
    }
}

namespace {

int stable_kernel_dim(const QMat& B) {
    int n = B.rows();
    QMat cur = B;
    int r = cur.rank();
    while (r > 0) {
        QMat next = cur * cur;
        int nr = next.rank();
        if (nr == r) break;
        cur = std::move(next);
        r = nr;
    }
    return n - r;
}

struct PValues {
    Rat p2, p4, p6;
    bool all_zero() const { return p2 == 0 && p4 == 0 && p6 == 0; }
};

PValues trace_powers(const QMat& M) {
    QMat M2 = M * M;
    QMat M4 = M2 * M2;
    PValues v;
    for (int i = 0; i < kDimW; ++i)
        for (int j = 0; j < kDimW; ++j) {
            v.p2 += M.at(i, j) * M.at(j, i);
            v.p4 += M2.at(i, j) * M2.at(j, i);
            v.p6 += M4.at(i, j) * M2.at(j, i);
        }
    return v;
}

// --- rational root machinery: roots mod a word-size prime, lifted back by
// --- rational reconstruction and verified exactly.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrime = 2305843009213693951ull;  // 2^61 - 1

u64 addm(u64 a, u64 b) {
    u64 s = a + b;
    if (s >= kPrime) s -= kPrime;
    return s;
}
u64 subm(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }
u64 mulm(u64 a, u64 b) { return static_cast<u64>((u128)a * b % kPrime); }
u64 powm(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a);
        a = mulm(a, a);
        e >>= 1;
    }
    return r;
}
u64 invm(u64 a) { return powm(a, kPrime - 2); }

using PolyM = std::vector<u64>;  // ascending, trimmed

void trimm(PolyM& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyM mulm_poly(const PolyM& a, const PolyM& b) {
    if (a.empty() || b.empty()) return {};
    PolyM r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j]));
    }
    return r;
}

PolyM modm_poly(PolyM a, const PolyM& m) {
    u64 lead_inv = invm(m.back());
    while (a.size() >= m.size()) {
        u64 f = mulm(a.back(), lead_inv);
        size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[off + i] = subm(a[off + i], mulm(f, m[i]));
        trimm(a);
        if (a.empty()) break;
    }
    return a;
}

PolyM gcdm_poly(PolyM a, PolyM b) {
    trimm(a);
    trimm(b);
    while (!b.empty()) {
        PolyM r = modm_poly(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invm(a.back());
        for (u64& c : a) c = mulm(c, inv);
    }
    return a;
}

PolyM powmod_poly(PolyM base, u64 e, const PolyM& m) {
    PolyM r{1};
    base = modm_poly(std::move(base), m);
    while (e) {
        if (e & 1) r = modm_poly(mulm_poly(r, base), m);
        base = modm_poly(mulm_poly(base, base), m);
        e >>= 1;
    }
    return r;
}

// All roots in F_p of a squarefree-ish polynomial, via x^p - x splitting.
void roots_mod_p(const PolyM& f, std::vector<u64>& out) {
    PolyM g = f;
    trimm(g);
    if (g.empty()) return;
    if (g.size() == 1) return;
    // keep only the part splitting into linear factors
    PolyM xp = powmod_poly(PolyM{0, 1}, kPrime, g);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = subm(xp[1], 1);  // x^p - x
    PolyM lin = gcdm_poly(g, xp);
    std::function<void(PolyM)> split = [&](PolyM h) {
        trimm(h);
        if (h.size() <= 1) return;
        if (h.size() == 2) {
            out.push_back(mulm(subm(kPrime, h[0]), invm(h[1])));
            return;
        }
        static u64 seed = 0x9e3779b97f4a7c15ull;
        for (int attempt = 0; attempt < 64; ++attempt) {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            u64 a = seed % kPrime;
            PolyM t = powmod_poly(PolyM{a, 1}, (kPrime - 1) / 2, h);
            if (t.empty())
                t = PolyM{kPrime - 1};
            else
                t[0] = subm(t[0], 1);
            PolyM d = gcdm_poly(h, t);
            if (d.size() > 1 && d.size() < h.size()) {
                PolyM q = h;
                // exact division q / d over F_p
                PolyM quot(q.size() - d.size() + 1, 0);
                u64 dinv = invm(d.back());
                for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
                    u64 f2 = mulm(q[k + d.size() - 1], dinv);
                    quot[k] = f2;
                    if (!f2) continue;
                    for (size_t i = 0; i < d.size(); ++i) q[k + i] = subm(q[k + i], mulm(f2, d[i]));
                }
                split(d);
                split(quot);
                return;
            }
        }
    };
    split(lin);
}

// num/den with |num|, den <= 2^29 from a residue mod kPrime.
std::optional<Rat> rational_reconstruct(u64 r) {
    mpz_class r0 = kPrime, r1 = r, t0 = 0, t1 = 1;
    mpz_class bound = mpz_class(1) << 29;
    while (r1 >= bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Rat out(r1, t1);
    out.canonicalize();
    return out;
}

// Reduce an exact polynomial mod kPrime; nullopt if a denominator degenerates.
std::optional<PolyM> to_mod(const UniPoly& p) {
    PolyM out(p.coeffs().size());
    mpz_class pm = kPrime;
    for (size_t i = 0; i < out.size(); ++i) {
        const Rat& c = p.coeffs()[i];
        mpz_class num = c.get_num() % pm, den = c.get_den() % pm;
        if (den == 0) return std::nullopt;
        if (num < 0) num += pm;
        u64 n = num.get_ui() % kPrime;
        u64 d = den.get_ui() % kPrime;
        out[i] = mulm(n, invm(d));
    }
    trimm(out);
    return out;
}

// All rational roots with multiplicity. Large-height roots beyond the
// reconstruction bound are simply not found (callers treat that as
// an undetermined classification, never a guess).
std::optional<std::vector<Rat>> rational_roots(UniPoly p) {
    std::vector<Rat> roots;
    if (p.is_zero()) return std::nullopt;
    for (;;) {
        while (p.degree() >= 1 && p.coeff(0) == 0) {
            roots.push_back(0);
            std::vector<Rat> c(p.coeffs().begin() + 1, p.coeffs().end());
            p = UniPoly(std::move(c));
        }
        if (p.degree() <= 0) return roots;
        if (p.degree() == 1) {
            roots.push_back(-p.coeff(0) / p.coeff(1));
            return roots;
        }
        if (p.degree() == 2) {
            Rat a = p.coeff(2), b = p.coeff(1), cc = p.coeff(0);
            Rat disc = b * b - 4 * a * cc;
            auto sq = sqrt_exact(disc);
            if (!sq) return roots;
            roots.push_back((-b + *sq) / (2 * a));
            roots.push_back((-b - *sq) / (2 * a));
            return roots;
        }
        auto pm = to_mod(p);
        if (!pm) return std::nullopt;
        std::vector<u64> residues;
        roots_mod_p(*pm, residues);
        bool found = false;
        Rat root;
        for (u64 r : residues) {
            auto cand = rational_reconstruct(r);
            if (cand && p.eval(*cand) == 0) {
                root = *cand;
                found = true;
                break;
            }
        }
        if (!found) return roots;
        roots.push_back(root);
        p = p.divide_exact(UniPoly({-root, Rat(1)}));
    }
}

// Cube multisets (sorted descending) matching the observed trace powers.
std::vector<std::array<Rat, 3>> recover_cube_multisets(const PValues& pv) {
    const E7Context& ctx = e7();
    const Rat a1 = ctx.dict2[0], a2 = ctx.dict2[1];
    const Rat b1 = ctx.dict4[0], b2 = ctx.dict4[1], b3 = ctx.dict4[2], b4 = ctx.dict4[3];
    const auto& g = ctx.dict6;
    std::vector<std::array<Rat, 3>> out;
    auto push_candidates = [&out](const Rat& e1, const Rat& e2, const Rat& e3) {
        UniPoly cubic({-e3, e2, -e1, Rat(1)});
        auto roots = rational_roots(cubic);
        if (!roots || roots->size() != 3) return;
        std::array<Rat, 3> m{(*roots)[0], (*roots)[1], (*roots)[2]};
        std::sort(m.begin(), m.end(), [](const Rat& a, const Rat& b) { return a > b; });
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    };

    // e1 = 0 branch.
    {
        Rat e2 = pv.p2 / a2;
        if (b3 * e2 * e2 == pv.p4) {
            Rat rhs = (pv.p6 - g[3] * e2 * e2 * e2) / g[6];
            auto e3 = sqrt_exact(rhs);
            if (e3) {
                push_candidates(0, e2, *e3);
                if (*e3 != 0) push_candidates(0, e2, -*e3);
            }
        }
    }
    // e1 != 0 branch: substitute e2(e1) and e1*e3 = A(e1), clear denominators.
    {
        UniPoly e1p({Rat(0), Rat(1)});
        UniPoly e2p = UniPoly({pv.p2 / a2}) - UniPoly({Rat(0), Rat(0), a1 / a2});
        UniPoly e1sq = e1p * e1p;
        UniPoly A = UniPoly({pv.p4}) - e1sq * e1sq * b1 - e1sq * e2p * b2 - e2p * e2p * b3;  // = b4 * e1 * e3
        // p6 equation times e1^2 b4^2, with e1 e3 replaced by A / b4
        UniPoly P = e1sq * e1sq * e1sq * e1sq * (g[0] * b4 * b4);
        P = P + e1sq * e1sq * e1sq * e2p * (g[1] * b4 * b4);
        P = P + e1sq * e1sq * e2p * e2p * (g[2] * b4 * b4);
        P = P + e1sq * e2p * e2p * e2p * (g[3] * b4 * b4);
        P = P + e1sq * e1sq * A * (g[4] * b4);
        P = P + e1sq * e2p * A * (g[5] * b4);
        P = P + A * A * g[6];
        P = P - e1sq * (pv.p6 * b4 * b4);
        auto roots = rational_roots(P);
        if (roots) {
            std::set<Rat> seen;
            for (const Rat& e1 : *roots) {
                if (e1 == 0 || seen.count(e1)) continue;
                seen.insert(e1);
                Rat e2 = (pv.p2 - a1 * e1 * e1) / a2;
                Rat e3 = (pv.p4 - b1 * e1 * e1 * e1 * e1 - b2 * e1 * e1 * e2 - b3 * e2 * e2) / (b4 * e1);
                push_candidates(e1, e2, e3);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (int i = 0; i < 3; ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    });
    return out;
}

struct PatternResult {
    int family = 0;
    std::optional<InvariantTriple> rep;
    std::string diagnostic;
};

// Family from the cube pattern of a recovered multiset, with a canonical
// representative in the family's stated shape.
PatternResult pattern_of_multiset(std::array<Rat, 3> cubes /* sorted descending */) {
    PatternResult r;
    int zeros = 0;
    for (const auto& c : cubes) zeros += (c == 0);
    auto rep3 = [&](const Rat& cx, const Rat& cy, const Rat& cz) -> std::optional<InvariantTriple> {
        auto x = cbrt_exact(cx), y = cbrt_exact(cy), z = cbrt_exact(cz);
        if (!x || !y || !z) return std::nullopt;
        return InvariantTriple{*x, *y, *z};
    };
    if (zeros == 3) {
        r.family = 7;
        r.rep = InvariantTriple{0, 0, 0};
        return r;
    }
    if (zeros == 2) {
        Rat t = cubes[0] != 0 ? cubes[0] : cubes[2];
        r.family = 6;
        r.rep = rep3(t, 0, 0);
        return r;
    }
    if (zeros == 1) {
        Rat a = cubes[0] != 0 ? cubes[0] : cubes[1];
        Rat b = cubes[2] != 0 ? cubes[2] : cubes[1];
        // a is the larger nonzero cube, b the smaller.
        if (a == b) {
            r.family = 4;
            r.rep = rep3(0, a, a);
        } else if (a == -b) {
            r.family = 5;
            r.rep = rep3(0, a, b);  // (0, t, -t) with t the positive cube root
        } else {
            r.family = 2;
            r.rep = rep3(0, a, b);
        }
        return r;
    }
    // all cubes nonzero
    bool eq01 = cubes[0] == cubes[1], eq12 = cubes[1] == cubes[2];
    if (eq01 && eq12) {
        r.diagnostic = "three equal nonzero cubes do not match a canonical family shape";
        return r;
    }
    if (eq01 || eq12) {
        Rat b = eq01 ? cubes[0] : cubes[1];
        Rat a = eq01 ? cubes[2] : cubes[0];
        r.family = 3;
        r.rep = rep3(a, b, b);
        return r;
    }
    r.family = 1;
    r.rep = rep3(cubes[0], cubes[1], cubes[2]);
    return r;
}

struct ApproxDims {
    int dim = -1;
    double gap = 0.0;
    bool determined = true;
};

ApproxDims approx_kernel_dim(const DMat& M, double tol) {
    std::vector<double> sv = M.singular_values();
    ApproxDims out;
    if (sv.empty() || sv[0] == 0.0) {
        out.dim = M.cols();
        out.gap = 1e300;
        return out;
    }
    double cut = tol * sv[0];
    int r = 0;
    out.gap = 1e300;
    for (double s : sv) {
        if (s > cut) {
            ++r;
            out.gap = std::min(out.gap, s / cut);
        }
        // guard band on both sides of the cut
        if (s > cut / 10 && s <= 10 * cut) out.determined = false;
    }
    out.dim = M.cols() - r;
    return out;
}

ClassificationReport classify_exact(const Bracket& l, const ClassifyOptions& opts) {
    ClassificationReport rep;
    rep.mode = Mode::exact;
    Rat scale;
    Bracket li = l.integerized(&scale);  // li = scale * l, same kernels

    QMat M = phi_cube_W(li);
    int kd1 = kDimW - M.rank();

    SigmaBlocks sb = sigma_blocks(li);
    QMat B1 = sb.cube_h1(), B0 = sb.cube_h0(), Bm1 = sb.cube_hm1();
    rep.dims = GradedKernelDims{kDimW - Bm1.rank(), kDimH0 - B0.rank(), kDimW - B1.rank()};
    GradedKernelDims stable{stable_kernel_dim(Bm1), stable_kernel_dim(B0), stable_kernel_dim(B1)};

    if (opts.semisimple_flag) {
        bool ss = rep.dims == stable;
        if (ss) {
            // Kernel stability only constrains the zero eigenvalue; confirm with
            // the squarefree annihilation test per block.
            for (const QMat* B : {&B1, &B0, &Bm1}) {
                UniPoly f = squarefree_part(char_poly(*B));
                if (!f.eval(*B).is_zero()) {
                    ss = false;
                    break;
                }
            }
            if (ss) {
                // sigma itself is semisimple iff its cube is and ker sigma matches
                // the stable kernel of the cube.
                int ker_sigma = kDimE7 - sigma(li).q().rank();
                ss = ker_sigma == stable.dm1 + stable.d0 + stable.d1;
            }
        }
        rep.semisimple = ss;
    }

    PValues pv = trace_powers(M);
    // Descale to the original bracket: the trace powers are homogeneous of
    // degrees 6, 12 and 18, and orbit samples then share the canonical values.
    Rat s3 = cube(scale), s6 = s3 * s3;
    pv.p2 /= s6;
    pv.p4 /= s6 * s6;
    pv.p6 /= s6 * s6 * s6;

    if (kd1 == 3) {
        rep.family = 1;
        rep.in_U = true;
    } else if (stable.dm1 == kDimW && stable.d0 == kDimH0 && stable.d1 == kDimW) {
        rep.family = 7;
        rep.invariants = InvariantTriple{0, 0, 0};
        rep.in_U = false;
        return rep;
    }

    auto multisets = recover_cube_multisets(pv);
    PatternResult chosen;
    for (auto cubes : multisets) {
        PatternResult pr = pattern_of_multiset(cubes);
        if (pr.family == 0) continue;
        if (rep.family == 1 && pr.family != 1) continue;  // kernel routing is authoritative
        if (pr.rep) {
            chosen = pr;
            break;
        }
        if (chosen.family == 0) chosen = pr;
    }

    if (rep.family == 1) {
        rep.invariants = chosen.family == 1 ? chosen.rep : std::nullopt;
        if (!rep.invariants) rep.diagnostic = "orbit representative is not rational";
        return rep;
    }
    if (chosen.family == 0) {
        rep.family = 0;
        rep.diagnostic = multisets.empty() ? "spectral dictionary produced no rational cube multiset"
                                           : chosen.diagnostic;
        return rep;
    }
    rep.family = chosen.family;
    rep.invariants = chosen.rep;
    rep.in_U = rep.family == 1 || rep.family == 2 || rep.family == 5;
    if (!rep.invariants) rep.diagnostic = "orbit representative is not rational";
    return rep;
}

ClassificationReport classify_approx(const Bracket& l_in, const ClassifyOptions& opts) {
    ClassificationReport rep;
    rep.mode = Mode::approx;
    double tol = opts.tol;
    Bracket l = l_in.mode() == Mode::approx ? l_in : l_in.to_approx();
    double maxabs = 0.0;
    for (double v : l.d()) maxabs = std::max(maxabs, std::fabs(v));
    if (maxabs > 0.0)
        for (double& v : l.d()) v /= maxabs;
    DMat M = phi_cube_W_approx(l);
    ApproxDims kd1 = approx_kernel_dim(M, tol);
    SigmaBlocksD sb = sigma_blocks_approx(l);
    DMat B1 = sb.Q * (sb.P * sb.R);
    DMat B0 = sb.P * (sb.R * sb.Q);
    DMat Bm1 = sb.R * (sb.Q * sb.P);
    ApproxDims a1 = approx_kernel_dim(B1, tol), a0 = approx_kernel_dim(B0, tol), am = approx_kernel_dim(Bm1, tol);
    rep.dims = GradedKernelDims{am.dim, a0.dim, a1.dim};
    rep.gap_ratio = std::min(std::min(kd1.gap, a1.gap), std::min(a0.gap, am.gap));
    if (!kd1.determined || !a1.determined || !a0.determined || !am.determined) {
        rep.family = 0;
        rep.diagnostic = "kernel dimension sits within 10x of the tolerance cut";
        return rep;
    }
    if (kd1.dim == 3) {
        rep.family = 1;
        rep.in_U = true;
    } else {
        rep.family = 0;
        rep.family1_excluded = true;
        rep.diagnostic = "approx mode resolves membership in family 1 only";
    }
    return rep;
}

}  // namespace

GradedKernelDims graded_kernel_dims(const Bracket& l) {
    Bracket li = l.mode() == Mode::exact ? l.integerized() : l;
    if (li.mode() != Mode::exact) throw mode_error("graded kernel dims need an exact bracket");
    SigmaBlocks sb = sigma_blocks(li);
    return GradedKernelDims{kDimW - sb.cube_hm1().rank(), kDimH0 - sb.cube_h0().rank(),
                            kDimW - sb.cube_h1().rank()};
}

GradedKernelDims stable_graded_kernel_dims(const Bracket& l) {
    Bracket li = l.integerized();
    SigmaBlocks sb = sigma_blocks(li);
    return GradedKernelDims{stable_kernel_dim(sb.cube_hm1()), stable_kernel_dim(sb.cube_h0()),
                            stable_kernel_dim(sb.cube_h1())};
}

bool is_generic(const Bracket& l) {
    if (l.mode() == Mode::approx) {
        ApproxDims d = approx_kernel_dim(phi_cube_W_approx(l), 1e-9);
        if (!d.determined) throw domain_error("genericity undetermined at this tolerance");
        return d.dim == 3;
    }
    Bracket li = l.integerized();
    return kDimW - phi_cube_W(li).rank() == 3;
}

ClassificationReport classify(const Bracket& l, const ClassifyOptions& opts) {
    return l.mode() == Mode::exact ? classify_exact(l, opts) : classify_approx(l, opts);
}

std::optional<InvariantTriple> orbit_invariants(const Bracket& l) {
    if (l.mode() != Mode::exact) return std::nullopt;
    ClassifyOptions opts;
    opts.semisimple_flag = false;
    ClassificationReport rep = classify_exact(l, opts);
    return rep.invariants;
}

const WeylGroupGW& weyl_group_gw(bool complex_mode) {
    static const WeylGroupGW complex_group = [] {
        std::vector<GwElement> gens;
        GwElement t;
        t.src = {1, 0, 2};
        gens.push_back(t);
        t.src = {2, 1, 0};
        gens.push_back(t);
        t.src = {0, 2, 1};
        gens.push_back(t);
        for (int d0 = 0; d0 < 3; ++d0)
            for (int d1 = 0; d1 < 3; ++d1)
                for (int d2 = 0; d2 < 3; ++d2) {
                    GwElement s;
                    s.exp = {d0, d1, d2};
                    gens.push_back(s);
                }
        std::set<GwElement> closed{GwElement{}};
        std::vector<GwElement> frontier{GwElement{}};
        while (!frontier.empty()) {
            std::vector<GwElement> next;
            for (const GwElement& h : frontier)
                for (const GwElement& g : gens) {
                    // compose: apply h, then g
                    GwElement c;
                    for (int i = 0; i < 3; ++i) {
                        c.src[i] = h.src[g.src[i]];
                        c.exp[i] = (g.exp[i] + h.exp[g.src[i]]) % 3;
                    }
                    if (closed.insert(c).second) {
                        next.push_back(c);
                        if (closed.size() > 10000) throw domain_error("group generation exceeded 10000 elements");
                    }
                }
            frontier = std::move(next);
        }
        WeylGroupGW w;
        w.complex_mode = true;
        w.elements.assign(closed.begin(), closed.end());
        return w;
    }();
    static const WeylGroupGW real_group = [] {
        WeylGroupGW w;
        w.complex_mode = false;
        for (const GwElement& g : complex_group.elements) {
            if (g.exp == std::array<int, 3>{0, 0, 0}) w.elements.push_back(g);
        }
        return w;
    }();
    return complex_mode ? complex_group : real_group;
}

std::optional<InvariantTriple> gw_apply_real(const GwElement& g, const InvariantTriple& v) {
    const Rat* in[3] = {&v.x, &v.y, &v.z};
    Rat out[3];
    for (int i = 0; i < 3; ++i) {
        const Rat& src = *in[g.src[i]];
        if (g.exp[i] != 0 && src != 0) return std::nullopt;  // omega twist of a nonzero value
        out[i] = src;
    }
    return InvariantTriple{out[0], out[1], out[2]};
}

Bracket normalize_unique(const Bracket& l) {
    auto rep = orbit_invariants(l);
    if (!rep) throw domain_error("orbit invariants undetermined; cannot normalize");
    std::set<std::array<Rat, 3>> seen;
    struct Candidate {
        Rat x, y, z;
        std::array<Rat, 3> key;
    };
    std::vector<Candidate> candidates;
    for (const GwElement& g : weyl_group_gw(true).elements) {
        auto img = gw_apply_real(g, *rep);
        if (!img) continue;
        Rat diff = img->x - img->z;
        if (diff == 0) continue;
        Rat x = img->x / diff, y = img->y / diff, z = img->z / diff;
        if (!seen.insert({x, y, z}).second) continue;
        candidates.push_back({x, y, z, {abs(y), abs(x), abs(z)}});
    }
    if (candidates.empty()) throw domain_error("every orbit representative has x - z = 0");
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
    for (const Candidate& c : candidates) {
        if (&c != &*best && c.key == best->key)
            throw domain_error("uniqueness tie between (" + rat_str(best->x) + "," + rat_str(best->y) + "," +
                               rat_str(best->z) + ") and (" + rat_str(c.x) + "," + rat_str(c.y) + "," +
                               rat_str(c.z) + ")");
    }
    return l_of(best->x, best->y, best->z);
}

std::vector<Bracket> sample_orbit(const FamilyParams& p, int n, std::uint64_t seed) {
    Bracket base = canonical_semisimple(p);
    if (p.nilpotent_id >= 0) {
        auto cat = nilpotent_catalog(p.family);
        if (p.nilpotent_id >= static_cast<int>(cat.size())) throw param_error("nilpotent catalog index out of range");
        base = base + cat[p.nilpotent_id];
    }
    Rng rng(seed);
    std::vector<Bracket> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        QMat s1(6, 6), s2(3, 3);
        Rat d1, d2;
        do {
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) s1.at(i, j) = rng.small_rat(3, 1);
            d1 = s1.det();
        } while (d1 == 0);
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s2.at(i, j) = rng.small_rat(3, 1);
            d2 = s2.det();
        } while (d2 == 0);
        // det(s1) * det(s2) = 1 keeps the recovered orbit invariants exact.
        Rat d = d1 * d2;
        for (int j = 0; j < 3; ++j) s2.at(0, j) /= d;
        out.push_back(s_act(SAction::group_exact(s1, s2), base));
    }
    return out;
}

namespace {

SAction shift_map(std::initializer_list<std::array<int, 3>> entries) {
    // entries: {target_col, added_row, numerator}: a^{col} -> a^{col} + num * a^{row}
    QMat s1 = QMat::identity(6);
    for (const auto& e : entries) s1.at(e[1], e[0]) = e[2];
    return SAction::group_exact(std::move(s1), QMat::identity(3));
}

}  // namespace

std::vector<StabilizerFixture> stabilizer_catalog() {
    std::vector<StabilizerFixture> out;
    Bracket u1 = u_basic(1), u2 = u_basic(2), u3 = u_basic(3);
    auto n3 = nilpotent_catalog(3)[1];
    auto pool4 = nilpotent_catalog(4);
    auto cat6 = nilpotent_catalog(6);

    StabilizerFixture even_shift{"even_shift", shift_map({{1, 0, 1}, {3, 2, 1}, {5, 4, 1}}), {}};
    even_shift.fixes = {u1, u2 + u3, n3};
    for (const auto& c : pool4) even_shift.fixes.push_back(c);
    out.push_back(std::move(even_shift));

    out.push_back({"shift_a2", shift_map({{1, 0, 1}}), {u1}});
    out.push_back({"shift_a5_a6", shift_map({{4, 5, 1}}), {u1, cat6[0]}});
    out.push_back({"stab_n6_long", shift_map({{1, 0, -1}, {3, 2, 1}, {5, 4, 1}}), {u1, cat6[1]}});
    out.push_back({"stab_n6_mid", shift_map({{1, 0, 1}, {3, 2, -1}}), {u1, cat6[2]}});
    out.push_back({"stab_n6_short", shift_map({{1, 0, -1}, {2, 3, 1}, {5, 4, 1}}), {u1, cat6[3]}});
    return out;
}

SAction family2_deformation(const Rat& x) {
    if (x == 0) throw param_error("deformation parameter must be nonzero");
    QMat s1(6, 6), s2(3, 3);
    for (int i = 0; i < 4; ++i) s1.at(i, i) = 1 / x;
    s1.at(4, 4) = x * x;
    s1.at(5, 5) = x * x;
    s2.at(0, 0) = 1 / x;
    s2.at(1, 1) = 1 / x;
    s2.at(2, 2) = x * x;
    return SAction::group_exact(std::move(s1), std::move(s2));
}

SAction family3_deformation(const Rat& x) {
    if (x == 0) throw param_error("deformation parameter must be nonzero");
    QMat s1 = QMat::identity(6);
    s1.at(0, 1) = 1 / x;
    s1.at(2, 3) = 1 / x;
    s1.at(4, 5) = 1 / x;
    return SAction::group_exact(std::move(s1), QMat::identity(3));
}

SAction gw_witness_swap_xy() {
    QMat c6(6, 6), d1(6, 6), c3(3, 3);
    for (int i = 0; i < 6; ++i) c6.at((i + 1) % 6, i) = 1;
    for (int i = 0; i < 6; ++i) d1.at(i, i) = (i % 2 == 0) ? 1 : -1;
    c3.at(2, 0) = -1;
    c3.at(0, 1) = -1;
    c3.at(1, 2) = -1;
    QMat s2 = -c3;
    return SAction::group_exact(c6 * d1, std::move(s2));
}

SAction gw_witness_swap_xz() {
    QMat pswap(6, 6), d1(6, 6);
    int perm[6] = {5, 2, 1, 4, 3, 0};
    for (int i = 0; i < 6; ++i) pswap.at(perm[i], i) = 1;
    for (int i = 0; i < 6; ++i) d1.at(i, i) = (i % 2 == 0) ? 1 : -1;
    return SAction::group_exact(pswap * d1, QMat::identity(3));
}

}  // namespace tg
