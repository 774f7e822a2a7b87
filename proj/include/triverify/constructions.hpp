#pragma once

// Builders for the classical groups the catalog ships, each returning
// permutation generators together with the classical order the resulting
// chain must certify. The catalog pipeline never trusts these constructions:
// load-time certification recomputes every order from scratch.

#include <cstdint>
#include <string>
#include <vector>

#include "triverify/matrix_group.hpp"
#include "triverify/perm_group.hpp"

namespace triverify::construct {

struct Built {
    std::vector<Permutation> generators;
    std::size_t degree = 0;
    BigInt expected_order;
};

inline Built certify(Built b) {
    auto G = PermGroup::from_generators(b.generators);
    if (G.order() != b.expected_order)
        throw Error("construction order check failed: computed " + G.order().str() +
                    " expected " + b.expected_order.str());
    return b;
}

// ---- natural actions ----

inline Built symmetric_natural(std::size_t n) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
    Built b;
    b.degree = n;
    b.generators = {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_images(std::move(cyc))};
    b.expected_order = 1;
    for (std::size_t i = 2; i <= n; ++i) b.expected_order *= BigInt(i);
    return certify(std::move(b));
}

inline Built alternating_natural(std::size_t n) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
    Permutation full = Permutation::from_images(std::move(cyc));
    Permutation three = Permutation::from_cycles(n, {{0, 1, 2}});
    Built b;
    b.degree = n;
    b.generators = {three, n % 2 == 1 ? full : compose(Permutation::from_cycles(n, {{0, 1}}), full)};
    b.expected_order = 1;
    for (std::size_t i = 2; i <= n; ++i) b.expected_order *= BigInt(i);
    b.expected_order /= 2;
    return certify(std::move(b));
}

inline Built cyclic_natural(std::size_t n) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
    Built b;
    b.degree = n;
    b.generators = {Permutation::from_images(std::move(cyc))};
    b.expected_order = BigInt(n);
    return certify(std::move(b));
}

// ---- projective line and plane ----

namespace detail {

inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    auto fs = factor_u64_complete(q);
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (fs[i] != fs[0]) throw Error("not a prime power");
    return {static_cast<std::uint32_t>(fs[0]), static_cast<std::uint32_t>(fs.size())};
}

}  // namespace detail

// PSL_2(q) on the q+1 points of the projective line.
inline Built psl2(std::uint64_t q) {
    auto [p, k] = detail::prime_power(q);
    GaloisField F(p, k);
    ProjectivePoints pts(F, 2);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl2_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    b.expected_order = classical_psl2_order(q);
    return certify(std::move(b));
}

inline Built pgl2(std::uint64_t q) {
    auto [p, k] = detail::prime_power(q);
    GaloisField F(p, k);
    ProjectivePoints pts(F, 2);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl2_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    b.generators.push_back(projective_permutation(pts, Matrix(2, {F.generator(), 0, 0, 1})));
    b.expected_order = classical_pgl2_order(q);
    return certify(std::move(b));
}

// Index-2 extensions of PSL_2(q) inside PGammaL_2(q), q = p^2:
// adjoin the Frobenius (kind = Field), or diag(g,1) * Frobenius (kind = Mixed).
enum class Psl2ExtKind { Field, Mixed };

inline Built psl2_ext(std::uint64_t q, Psl2ExtKind kind) {
    auto [p, k] = detail::prime_power(q);
    if (k != 2) throw Error("psl2_ext: built for q = p^2");
    GaloisField F(p, k);
    ProjectivePoints pts(F, 2);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl2_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    Permutation frob = frobenius_permutation(pts);
    if (kind == Psl2ExtKind::Field) {
        b.generators.push_back(frob);
    } else {
        Permutation diag = projective_permutation(pts, Matrix(2, {F.generator(), 0, 0, 1}));
        b.generators.push_back(compose(diag, frob));
    }
    b.expected_order = classical_psl2_order(q) * 2;
    return certify(std::move(b));
}

// <PSL_2(p^2), diag, frobenius>, the full C_2 x C_2 extension.
inline Built pgammal2_of_square(std::uint64_t q) {
    auto [p, k] = detail::prime_power(q);
    if (k != 2) throw Error("pgammal2_of_square: built for q = p^2");
    GaloisField F(p, k);
    ProjectivePoints pts(F, 2);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl2_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    b.generators.push_back(projective_permutation(pts, Matrix(2, {F.generator(), 0, 0, 1})));
    b.generators.push_back(frobenius_permutation(pts));
    b.expected_order = classical_psl2_order(q) * 4;
    return certify(std::move(b));
}

// SL_2(16).2 = <SL_2(16), x -> x^4> on the 17-point line.
inline Built sl2_16_ext() {
    GaloisField F(2, 4);
    ProjectivePoints pts(F, 2);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl2_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    Permutation frob = frobenius_permutation(pts);
    b.generators.push_back(compose(frob, frob));  // x -> x^4, order 2 on GF(16)
    b.expected_order = classical_psl2_order(16) * 2;
    return certify(std::move(b));
}

inline Built sl2_16() {
    return psl2(16);
}

// PSL_3(q) (equivalently the image of SL_3(q)) on the q^2+q+1 plane points.
inline Built psl3(std::uint64_t q) {
    auto [p, k] = detail::prime_power(q);
    GaloisField F(p, k);
    ProjectivePoints pts(F, 3);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl3_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    b.expected_order = classical_psl3_order(q);
    return certify(std::move(b));
}

// PGL_3(q) = PSL_3(q).gcd(3,q-1) on plane points.
inline Built pgl3(std::uint64_t q) {
    auto [p, k] = detail::prime_power(q);
    GaloisField F(p, k);
    ProjectivePoints pts(F, 3);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl3_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    b.generators.push_back(projective_permutation(pts, Matrix(3, {F.generator(), 0, 0, 0, 1, 0, 0, 0, 1})));
    b.expected_order = classical_psl3_order(q) * ((q - 1) % 3 == 0 ? 3 : 1);
    return certify(std::move(b));
}

// PSL_3(q).2_field on plane points (q = 2^a, Frobenius of order 2 needs a = 2).
inline Built psl3_field_ext(std::uint64_t q) {
    auto [p, k] = detail::prime_power(q);
    if (k != 2) throw Error("psl3_field_ext: built for q = p^2");
    GaloisField F(p, k);
    ProjectivePoints pts(F, 3);
    Built b;
    b.degree = pts.size();
    for (const auto& m : sl3_generator_matrices(F)) b.generators.push_back(projective_permutation(pts, m));
    b.generators.push_back(frobenius_permutation(pts));
    b.expected_order = classical_psl3_order(q) * 2;
    return certify(std::move(b));
}

// Graph (duality) extensions of PSL_3(q) act on points + lines: indices
// [0, N) are plane points, [N, 2N) are lines labelled by their dual vectors
// in the same canonical order. The polarity delta swaps the blocks.
namespace detail {

inline Permutation plane_dual_permutation(const ProjectivePoints& pts, const GaloisField& F,
                                          const Matrix& m, bool apply_frobenius) {
    std::size_t N = pts.size();
    Matrix minv_t = mat_transpose(mat_inverse(F, m));
    std::vector<Point> images(2 * N);
    auto act = [&](const Matrix& mat, std::size_t i) {
        const auto& v = pts.point(i);
        std::vector<GaloisField::Element> w(mat.dim, 0);
        for (std::uint32_t j = 0; j < mat.dim; ++j)
            for (std::uint32_t r = 0; r < mat.dim; ++r) w[j] = F.add(w[j], F.mul(v[r], mat.at(r, j)));
        if (apply_frobenius)
            for (auto& c : w) c = F.frobenius(c);
        return pts.index_of(std::move(w));
    };
    for (std::size_t i = 0; i < N; ++i) {
        images[i] = static_cast<Point>(act(m, i));
        images[N + i] = static_cast<Point>(N + act(minv_t, i));
    }
    return Permutation::from_images(std::move(images));
}

}  // namespace detail

enum class Psl3GraphKind { Graph, GraphField };

inline Built psl3_graph_ext(std::uint64_t q, Psl3GraphKind kind) {
    auto [p, k] = detail::prime_power(q);
    GaloisField F(p, k);
    ProjectivePoints pts(F, 3);
    std::size_t N = pts.size();
    bool with_frob = kind == Psl3GraphKind::GraphField;
    if (with_frob && k != 2) throw Error("psl3_graph_ext: graph-field needs q = p^2");
    Built b;
    b.degree = 2 * N;
    for (const auto& m : sl3_generator_matrices(F))
        b.generators.push_back(detail::plane_dual_permutation(pts, F, m, false));
    // The polarity [v] <-> v-perp, optionally composed with Frobenius.
    std::vector<Point> delta(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t j = i;
        if (with_frob) {
            auto v = pts.point(i);
            for (auto& c : v) c = F.frobenius(c);
            j = pts.index_of(std::move(v));
        }
        delta[i] = static_cast<Point>(N + j);
        delta[N + i] = static_cast<Point>(j);
    }
    b.generators.push_back(Permutation::from_images(std::move(delta)));
    b.expected_order = classical_psl3_order(q) * 2;
    return certify(std::move(b));
}

// ---- unitary groups ----

// The Hermitian geometry of F_{q^2}^dim with Gram matrix antidiag(1,...,1):
// h(u, v) = sum_i u_i * bar(v_{dim-1-i}), bar(x) = x^q.
class UnitarySpace {
  public:
    UnitarySpace(std::uint64_t q, std::uint32_t dim)
        : q_(q),
          F_([&] {
              auto [p, k] = detail::prime_power(q);
              return GaloisField(p, 2 * k);
          }()),
          pts_(F_, dim),
          dim_(dim) {
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (herm(pts_.point(i), pts_.point(i)) == 0) {
                iso_index_[i] = static_cast<Point>(isotropic_.size());
                isotropic_.push_back(i);
            }
        }
    }

    const GaloisField& field() const { return F_; }
    std::uint64_t q() const { return q_; }
    std::uint32_t dim() const { return dim_; }
    std::size_t num_isotropic() const { return isotropic_.size(); }
    const std::vector<GaloisField::Element>& isotropic_point(std::size_t i) const {
        return pts_.point(isotropic_[i]);
    }

    GaloisField::Element bar(GaloisField::Element x) const { return F_.pow(x, q_); }

    GaloisField::Element herm(const std::vector<GaloisField::Element>& u,
                              const std::vector<GaloisField::Element>& v) const {
        GaloisField::Element s = 0;
        for (std::uint32_t i = 0; i < dim_; ++i)
            s = F_.add(s, F_.mul(u[i], bar(v[dim_ - 1 - i])));
        return s;
    }

    bool is_unitary(const Matrix& m) const {
        for (std::uint32_t i = 0; i < dim_; ++i)
            for (std::uint32_t j = 0; j < dim_; ++j) {
                GaloisField::Element s = 0;
                for (std::uint32_t r = 0; r < dim_; ++r)
                    s = F_.add(s, F_.mul(m.at(i, r), bar(m.at(j, dim_ - 1 - r))));
                GaloisField::Element expect = (i + j == dim_ - 1) ? F_.one() : F_.zero();
                if (s != expect) return false;
            }
        return true;
    }

    // Permutation of the isotropic points under v -> v * m.
    Permutation action(const Matrix& m) const {
        std::vector<Point> images(isotropic_.size());
        for (std::size_t i = 0; i < isotropic_.size(); ++i) {
            const auto& v = pts_.point(isotropic_[i]);
            std::vector<GaloisField::Element> w(dim_, 0);
            for (std::uint32_t j = 0; j < dim_; ++j)
                for (std::uint32_t r = 0; r < dim_; ++r) w[j] = F_.add(w[j], F_.mul(v[r], m.at(r, j)));
            auto it = iso_index_.find(pts_.index_of(std::move(w)));
            if (it == iso_index_.end()) throw Error("unitary action does not preserve isotropic points");
            images[i] = it->second;
        }
        return Permutation::from_images(std::move(images));
    }

    // Coordinatewise x -> x^(p^power): semilinear, preserves isotropy.
    Permutation frobenius_action(std::uint32_t power) const {
        std::vector<Point> images(isotropic_.size());
        for (std::size_t i = 0; i < isotropic_.size(); ++i) {
            auto v = pts_.point(isotropic_[i]);
            for (auto& c : v) {
                for (std::uint32_t t = 0; t < power; ++t) c = F_.frobenius(c);
            }
            auto it = iso_index_.find(pts_.index_of(std::move(v)));
            if (it == iso_index_.end()) throw Error("frobenius does not preserve isotropic points");
            images[i] = it->second;
        }
        return Permutation::from_images(std::move(images));
    }

  private:
    std::uint64_t q_;
    GaloisField F_;
    ProjectivePoints pts_;
    std::uint32_t dim_;
    std::vector<std::size_t> isotropic_;
    std::map<std::size_t, Point> iso_index_;
};

namespace detail {

// Greedy prefix of `candidates` generating a group of the target order.
inline std::vector<Permutation> greedy_generators(const std::vector<Permutation>& candidates,
                                                  const BigInt& target) {
    std::vector<Permutation> chosen;
    std::optional<PermGroup> G;
    for (const auto& cand : candidates) {
        if (cand.is_identity()) continue;
        if (G) {
            if (G->order() == target) break;
            if (G->contains(cand)) continue;
        }
        chosen.push_back(cand);
        G = PermGroup::from_generators(chosen);
    }
    if (!G || G->order() != target)
        throw Error("greedy_generators: candidates generate order " +
                    (G ? G->order().str() : std::string("1")) + ", expected " + target.str());
    return chosen;
}

}  // namespace detail

// Replace a generating set by a random 2-element one when possible (smaller
// catalog entries, faster conjugation orbits). Deterministic via the seed.
inline std::vector<Permutation> pair_reduce(const std::vector<Permutation>& gens, const BigInt& target,
                                            std::uint64_t seed = 0x5eed, int tries = 64) {
    auto G = PermGroup::from_generators(gens);
    RandomElementSampler sampler(G, seed);
    for (int t = 0; t < tries; ++t) {
        Permutation a = sampler.next();
        Permutation b = sampler.next();
        if (a.is_identity() || b.is_identity()) continue;
        auto H = PermGroup::from_generators({a, b});
        if (H.order() == target) return {a, b};
    }
    return gens;
}

// PSU_3(q) on its q^3+1 isotropic points (the center of SU_3(q) acts
// trivially, so the permutation image is the projective group).
inline Built psu3(std::uint64_t q) {
    UnitarySpace U(q, 3);
    const GaloisField& F = U.field();
    std::vector<Permutation> candidates;
    // Weyl element: antidiagonal with determinant 1.
    Matrix w(3, {0, 0, 1, 0, (q % 2 == 0 ? F.one() : F.neg(1)), 0, 1, 0, 0});
    if (!U.is_unitary(w) || mat_det(F, w) != 1) throw Error("psu3: bad Weyl element");
    candidates.push_back(U.action(w));
    // Upper unitriangular unitary subgroup (q^3 elements), canonical order.
    for (std::uint64_t a = 0; a < F.order(); ++a)
        for (std::uint64_t b = 0; b < F.order(); ++b)
            for (std::uint64_t c = 0; c < F.order(); ++c) {
                Matrix m(3, {1, static_cast<GaloisField::Element>(a), static_cast<GaloisField::Element>(b),
                             0, 1, static_cast<GaloisField::Element>(c), 0, 0, 1});
                if (U.is_unitary(m)) candidates.push_back(U.action(m));
            }
    Built out;
    out.degree = U.num_isotropic();
    out.expected_order = classical_psu3_order(q);
    out.generators = detail::greedy_generators(candidates, out.expected_order);
    return out;
}

// SU_3(q).2: adjoin the order-2 field automorphism x -> x^q of F_{q^2}.
inline Built psu3_bar_ext(std::uint64_t q) {
    Built base = psu3(q);
    auto [p, k] = detail::prime_power(q);
    UnitarySpace U(q, 3);
    Built out;
    out.degree = base.degree;
    out.generators = base.generators;
    out.generators.push_back(U.frobenius_action(k));  // x -> x^(p^k) = x^q
    out.expected_order = base.expected_order * 2;
    return certify(std::move(out));
}

// PSU_4(q) on its (q^2+1)(q^3+1) isotropic points, generated by unitary
// transvections x -> x + lambda h(x, v) v over isotropic v, where
// bar(lambda) = -lambda.
inline Built psu4(std::uint64_t q) {
    UnitarySpace U(q, 4);
    const GaloisField& F = U.field();
    GaloisField::Element lambda = 0;
    for (std::uint64_t x = 1; x < F.order(); ++x) {
        auto e = static_cast<GaloisField::Element>(x);
        if (U.bar(e) == F.neg(e)) {
            lambda = e;
            break;
        }
    }
    if (lambda == 0) throw Error("psu4: no skew element for transvections");
    std::vector<Permutation> candidates;
    for (std::size_t i = 0; i < U.num_isotropic(); ++i) {
        const auto& v = U.isotropic_point(i);
        Matrix m = Matrix::identity(4);
        for (std::uint32_t r = 0; r < 4; ++r) {
            // h(e_r, v) = bar(v[3-r])
            GaloisField::Element coeff = F.mul(lambda, U.bar(v[3 - r]));
            for (std::uint32_t c = 0; c < 4; ++c) m.at(r, c) = F.add(m.at(r, c), F.mul(coeff, v[c]));
        }
        if (!U.is_unitary(m) || mat_det(F, m) != 1) throw Error("psu4: bad transvection");
        candidates.push_back(U.action(m));
    }
    Built out;
    out.degree = U.num_isotropic();
    out.expected_order = classical_psu4_order(q);
    out.generators = detail::greedy_generators(candidates, out.expected_order);
    return out;
}

// Index-2 extensions of PSU_4(q) for gcd(4, q+1) = 4, one per conjugacy
// class of involutions in the dihedral outer automorphism group D_8 =
// <[diag]> x| <[frobenius]>: the central [diag]^2, the field automorphism
// itself, and [diag]*[frobenius] (whose square falls back into PSU because
// frobenius inverts the diagonal torus).
enum class Psu4ExtKind { Field, Diagonal, Mixed };

inline Built psu4_ext(std::uint64_t q, Psu4ExtKind kind) {
    Built base = psu4(q);
    UnitarySpace U(q, 4);
    const GaloisField& F = U.field();
    auto [p, k] = detail::prime_power(q);
    Built out;
    out.degree = base.degree;
    out.generators = base.generators;
    out.expected_order = base.expected_order * 2;

    std::optional<Permutation> diag_perm;  // order 4 in PGU/PSU
    if (kind != Psu4ExtKind::Field) {
        std::uint64_t d = (q + 1) % 4 == 0 ? 4 : ((q + 1) % 2 == 0 ? 2 : 1);
        if (d != 4) throw Error("psu4_ext: needs PGU/PSU of order 4");
        // Diagonal similitude diag(a, 1, 1, bar(a)^{-1}) with det of
        // multiplicative order 4, so its class generates PGU/PSU.
        auto psu = PermGroup::from_generators(base.generators);
        GaloisField::Element a = F.generator();
        Matrix m = Matrix::identity(4);
        m.at(0, 0) = a;
        m.at(3, 3) = F.inv(U.bar(a));
        if (!U.is_unitary(m)) throw Error("psu4_ext: diagonal similitude not unitary");
        Matrix m2 = mat_mul(F, m, m);
        if (psu.contains(U.action(m2)))
            throw Error("psu4_ext: similitude class does not generate PGU/PSU");
        diag_perm = U.action(m);
    }
    switch (kind) {
        case Psu4ExtKind::Field:
            out.generators.push_back(U.frobenius_action(k));
            break;
        case Psu4ExtKind::Diagonal: {
            Permutation sq = compose(*diag_perm, *diag_perm);
            out.generators.push_back(sq);
            break;
        }
        case Psu4ExtKind::Mixed:
            out.generators.push_back(compose(*diag_perm, U.frobenius_action(k)));
            break;
    }
    return certify(std::move(out));
}

inline Built psu4_2() { return psu4(2); }

inline Built psu4_2_ext() { return psu4_ext(2, Psu4ExtKind::Field); }

// Sp_6(2) on the 63 nonzero vectors of F_2^6, generated by symplectic
// transvections x -> x + B(x,v) v with B the standard alternating form.
inline Built sp6_2() {
    auto form = [](std::uint32_t x, std::uint32_t y) {
        std::uint32_t s = 0;
        for (int pair = 0; pair < 3; ++pair) {
            std::uint32_t a = (x >> (2 * pair)) & 1, b = (x >> (2 * pair + 1)) & 1;
            std::uint32_t c = (y >> (2 * pair)) & 1, d = (y >> (2 * pair + 1)) & 1;
            s ^= (a & d) ^ (b & c);
        }
        return s;
    };
    std::vector<Permutation> candidates;
    for (std::uint32_t v = 1; v < 64; ++v) {
        std::vector<Point> images(63);
        for (std::uint32_t x = 1; x < 64; ++x) {
            std::uint32_t img = form(x, v) ? (x ^ v) : x;
            images[x - 1] = static_cast<Point>(img - 1);
        }
        candidates.push_back(Permutation::from_images(std::move(images)));
    }
    Built out;
    out.degree = 63;
    out.expected_order = classical_sp6_order(2);
    out.generators = detail::greedy_generators(candidates, out.expected_order);
    return out;
}

}  // namespace triverify::construct
