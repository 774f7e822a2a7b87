#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "triverify/bigint.hpp"
#include "triverify/field.hpp"
#include "triverify/perm.hpp"

namespace triverify {

// Square matrix over a GaloisField, row-major.
struct Matrix {
    std::uint32_t dim = 0;
    std::vector<GaloisField::Element> e;

    Matrix() = default;
    Matrix(std::uint32_t d, std::vector<GaloisField::Element> entries) : dim(d), e(std::move(entries)) {
        if (e.size() != static_cast<std::size_t>(d) * d) throw Error("Matrix: bad entry count");
    }

    GaloisField::Element& at(std::uint32_t i, std::uint32_t j) { return e[i * dim + j]; }
    GaloisField::Element at(std::uint32_t i, std::uint32_t j) const { return e[i * dim + j]; }

    static Matrix identity(std::uint32_t d) {
        Matrix m(d, std::vector<GaloisField::Element>(static_cast<std::size_t>(d) * d, 0));
        for (std::uint32_t i = 0; i < d; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline Matrix mat_mul(const GaloisField& F, const Matrix& a, const Matrix& b) {
    if (a.dim != b.dim) throw Error("mat_mul: dimension mismatch");
    Matrix r(a.dim, std::vector<GaloisField::Element>(static_cast<std::size_t>(a.dim) * a.dim, 0));
    for (std::uint32_t i = 0; i < a.dim; ++i)
        for (std::uint32_t k = 0; k < a.dim; ++k) {
            auto aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < a.dim; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return r;
}

inline GaloisField::Element mat_det(const GaloisField& F, Matrix m) {
    GaloisField::Element det = 1;
    for (std::uint32_t col = 0; col < m.dim; ++col) {
        std::uint32_t pivot = col;
        while (pivot < m.dim && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.dim) return 0;
        if (pivot != col) {
            for (std::uint32_t j = 0; j < m.dim; ++j) std::swap(m.e[pivot * m.dim + j], m.e[col * m.dim + j]);
            det = F.neg(det);
        }
        det = F.mul(det, m.at(col, col));
        GaloisField::Element inv = F.inv(m.at(col, col));
        for (std::uint32_t row = col + 1; row < m.dim; ++row) {
            GaloisField::Element f = F.mul(m.at(row, col), inv);
            if (f == 0) continue;
            for (std::uint32_t j = col; j < m.dim; ++j)
                m.at(row, j) = F.sub(m.at(row, j), F.mul(f, m.at(col, j)));
        }
    }
    return det;
}

inline Matrix mat_inverse(const GaloisField& F, Matrix m) {
    std::uint32_t d = m.dim;
    Matrix inv = Matrix::identity(d);
    for (std::uint32_t col = 0; col < d; ++col) {
        std::uint32_t pivot = col;
        while (pivot < d && m.at(pivot, col) == 0) ++pivot;
        if (pivot == d) throw Error("mat_inverse: singular matrix");
        if (pivot != col)
            for (std::uint32_t j = 0; j < d; ++j) {
                std::swap(m.e[pivot * d + j], m.e[col * d + j]);
                std::swap(inv.e[pivot * d + j], inv.e[col * d + j]);
            }
        GaloisField::Element s = F.inv(m.at(col, col));
        for (std::uint32_t j = 0; j < d; ++j) {
            m.at(col, j) = F.mul(m.at(col, j), s);
            inv.at(col, j) = F.mul(inv.at(col, j), s);
        }
        for (std::uint32_t row = 0; row < d; ++row) {
            if (row == col || m.at(row, col) == 0) continue;
            GaloisField::Element f = m.at(row, col);
            for (std::uint32_t j = 0; j < d; ++j) {
                m.at(row, j) = F.sub(m.at(row, j), F.mul(f, m.at(col, j)));
                inv.at(row, j) = F.sub(inv.at(row, j), F.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

inline Matrix mat_transpose(const Matrix& m) {
    Matrix t(m.dim, std::vector<GaloisField::Element>(m.e.size(), 0));
    for (std::uint32_t i = 0; i < m.dim; ++i)
        for (std::uint32_t j = 0; j < m.dim; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

// Projective points of F^dim as normalized row vectors (first nonzero
// coordinate is 1), in a fixed enumeration order: (1,*,...), then (0,1,*,...),
// and so on. dim 2 gives the projective line (q+1 points), dim 3 the plane
// (q^2+q+1 points).
class ProjectivePoints {
  public:
    ProjectivePoints(const GaloisField& F, std::uint32_t dim) : F_(F), dim_(dim) {
        if (dim < 2 || dim > 4) throw Error("ProjectivePoints: dimension must be 2..4");
        std::vector<GaloisField::Element> v(dim, 0);
        for (std::uint32_t lead = 0; lead < dim; ++lead) {
            std::fill(v.begin(), v.end(), 0);
            v[lead] = 1;
            enumerate(v, lead + 1);
        }
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<GaloisField::Element>& point(std::size_t i) const { return points_[i]; }

    std::size_t index_of(std::vector<GaloisField::Element> v) const {
        normalize(v);
        auto it = index_.find(key(v));
        if (it == index_.end()) throw Error("ProjectivePoints: vector not found");
        return it->second;
    }

    void normalize(std::vector<GaloisField::Element>& v) const {
        std::uint32_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead == v.size()) throw Error("ProjectivePoints: zero vector");
        GaloisField::Element inv = F_.inv(v[lead]);
        for (auto& c : v) c = F_.mul(c, inv);
    }

    const GaloisField& field() const { return F_; }
    std::uint32_t dim() const { return dim_; }

  private:
    void enumerate(std::vector<GaloisField::Element>& v, std::uint32_t from) {
        if (from == dim_) {
            index_[key(v)] = points_.size();
            points_.push_back(v);
            return;
        }
        for (std::uint64_t c = 0; c < F_.order(); ++c) {
            v[from] = static_cast<GaloisField::Element>(c);
            enumerate(v, from + 1);
        }
        v[from] = 0;
    }

    std::uint64_t key(const std::vector<GaloisField::Element>& v) const {
        std::uint64_t k = 0;
        for (auto c : v) k = k * F_.order() + c;
        return k;
    }

    const GaloisField& F_;
    std::uint32_t dim_;
    std::vector<std::vector<GaloisField::Element>> points_;
    std::map<std::uint64_t, std::size_t> index_;
};

// Permutation induced on projective points by the right action v -> v*M.
// Row-vector action makes permutation composition match matrix products.
inline Permutation projective_permutation(const ProjectivePoints& pts, const Matrix& m) {
    const GaloisField& F = pts.field();
    if (m.dim != pts.dim()) throw Error("projective_permutation: dimension mismatch");
    if (mat_det(F, m) == 0) throw Error("projective_permutation: singular generator");
    std::vector<Point> images(pts.size());
    std::vector<bool> hit(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& v = pts.point(i);
        std::vector<GaloisField::Element> w(m.dim, 0);
        for (std::uint32_t j = 0; j < m.dim; ++j)
            for (std::uint32_t r = 0; r < m.dim; ++r)
                w[j] = F.add(w[j], F.mul(v[r], m.at(r, j)));
        std::size_t img = pts.index_of(std::move(w));
        if (hit[img]) throw Error("projective_permutation: degenerate action");
        hit[img] = true;
        images[i] = static_cast<Point>(img);
    }
    return Permutation::from_images(std::move(images));
}

// Permutation induced by the coordinatewise Frobenius x -> x^p (semilinear,
// well-defined on projective points).
inline Permutation frobenius_permutation(const ProjectivePoints& pts) {
    const GaloisField& F = pts.field();
    std::vector<Point> images(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto v = pts.point(i);
        for (auto& c : v) c = F.frobenius(c);
        images[i] = static_cast<Point>(pts.index_of(std::move(v)));
    }
    return Permutation::from_images(std::move(images));
}

// A matrix group together with the action that turns it into permutations.
// The unitary-isotropic tag is reserved in catalog schemas: groups needing it
// ship explicit permutation generators instead (the order-certification
// invariant makes the construction route optional).
enum class ActionTag { ProjectiveLine, ProjectivePlane, UnitaryIsotropicPoints, RawPoints };

struct MatrixGroupSpec {
    std::uint32_t dimension = 2;
    std::uint32_t characteristic = 2;
    std::uint32_t extension_degree = 1;
    std::vector<Matrix> generators;
    ActionTag action = ActionTag::ProjectiveLine;
};

inline std::vector<Permutation> projective_action(const MatrixGroupSpec& spec) {
    if (spec.action == ActionTag::UnitaryIsotropicPoints || spec.action == ActionTag::RawPoints)
        throw Error("projective_action: action tag not constructed here; supply permutation "
                    "generators through the catalog instead");
    std::uint32_t want_dim = spec.action == ActionTag::ProjectiveLine ? 2 : 3;
    if (spec.dimension != want_dim)
        throw Error("projective_action: action tag incompatible with dimension");
    GaloisField F(spec.characteristic, spec.extension_degree);
    ProjectivePoints pts(F, spec.dimension);
    std::vector<Permutation> out;
    for (const auto& m : spec.generators) out.push_back(projective_permutation(pts, m));
    if (out.empty()) throw Error("projective_action: no generators");
    return out;
}

// ---- standard generator matrices ----

inline std::vector<Matrix> sl2_generator_matrices(const GaloisField& F) {
    auto E12 = [&](GaloisField::Element a) { return Matrix(2, {1, a, 0, 1}); };
    Matrix w(2, {0, F.neg(1), 1, 0});
    std::vector<Matrix> gens{E12(1), w};
    if (F.extension_degree() > 1) gens.insert(gens.begin() + 1, E12(F.generator()));
    return gens;
}

inline std::vector<Matrix> sl3_generator_matrices(const GaloisField& F) {
    std::vector<Matrix> gens;
    auto elem = [&](std::uint32_t i, std::uint32_t j, GaloisField::Element a) {
        Matrix m = Matrix::identity(3);
        m.at(i, j) = a;
        return m;
    };
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            gens.push_back(elem(i, j, 1));
            if (F.extension_degree() > 1) gens.push_back(elem(i, j, F.generator()));
        }
    return gens;
}

inline BigInt classical_psl2_order(std::uint64_t q) {
    BigInt Q(q);
    return Q * (Q * Q - 1) / (q % 2 == 0 ? 1 : 2);
}

inline BigInt classical_pgl2_order(std::uint64_t q) {
    BigInt Q(q);
    return Q * (Q * Q - 1);
}

inline BigInt classical_psl3_order(std::uint64_t q) {
    BigInt Q(q);
    return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q - 1) / ((q - 1) % 3 == 0 ? 3 : 1);
}

inline BigInt classical_psu3_order(std::uint64_t q) {
    BigInt Q(q);
    return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1) / ((q + 1) % 3 == 0 ? 3 : 1);
}

inline BigInt classical_psu4_order(std::uint64_t q) {
    BigInt Q(q);
    return Q * Q * Q * Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1) * (Q * Q * Q * Q - 1) /
           ((q + 1) % 4 == 0 ? 4 : ((q + 1) % 2 == 0 ? 2 : 1));
}

inline BigInt classical_sp6_order(std::uint64_t q) {
    BigInt Q(q);
    BigInt q2 = Q * Q;
    return bigint_pow(Q, 9) * (q2 - 1) * (q2 * q2 - 1) * (bigint_pow(Q, 6) - 1) / (q % 2 == 0 ? 1 : 2);
}

}  // namespace triverify
