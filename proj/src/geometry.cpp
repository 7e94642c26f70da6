#include "spheresep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "spheresep/error.hpp"

namespace spheresep {

namespace {

void require_same_dim(const Sphere& a, const Sphere& b) {
    require(a.dim() == b.dim(), ErrorCode::kDimensionMismatch,
            "spheres of dimension " + std::to_string(a.dim()) + " and " +
                std::to_string(b.dim()));
}

double relative_gap(double x, double y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

// Orthonormal basis of the complement of the unit vector `n`.
std::vector<Point> orthonormal_complement(const Point& n) {
    const std::size_t m = n.size();
    std::vector<Point> basis;
    basis.reserve(m - 1);
    std::vector<Point> span{n};
    for (std::size_t k = 0; k < m && basis.size() + 1 < m; ++k) {
        Point e(m, 0.0);
        e[k] = 1.0;
        for (const Point& b : span) {
            const double proj = dot(e, b);
            for (std::size_t i = 0; i < m; ++i) e[i] -= proj * b[i];
        }
        const double len = norm(e);
        if (len < 1e-6) continue;
        for (double& x : e) x /= len;
        basis.push_back(e);
        span.push_back(e);
    }
    return basis;
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// Returns false when a pivot is negligible relative to the matrix scale.
bool solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const std::size_t n = b.size();
    double scale = 0.0;
    for (const auto& row : a)
        for (double x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        if (std::abs(a[pivot][col]) < 1e-13 * scale) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * b[k];
        b[i] = s / a[i][i];
    }
    return true;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

Arrangement Arrangement::of_spheres(std::size_t dim, std::vector<Sphere> spheres,
                                   std::vector<std::string> labels) {
    Arrangement arr;
    arr.dim_ = dim;
    if (labels.empty()) labels = default_labels(spheres.size());
    arr.objects_ = std::move(spheres);
    arr.labels_ = std::move(labels);
    arr.validate();
    return arr;
}

Arrangement Arrangement::of_chords(std::size_t dim, std::vector<HyperplaneChord> chords,
                                   std::vector<std::string> labels) {
    Arrangement arr;
    arr.dim_ = dim;
    if (labels.empty()) labels = default_labels(chords.size());
    arr.objects_ = std::move(chords);
    arr.labels_ = std::move(labels);
    arr.validate();
    return arr;
}

std::size_t Arrangement::size() const noexcept {
    return std::visit([](const auto& v) { return v.size(); }, objects_);
}

ObjectKind Arrangement::kind() const noexcept {
    return std::holds_alternative<std::vector<Sphere>>(objects_) ? ObjectKind::kSphere
                                                                 : ObjectKind::kChord;
}

const std::vector<Sphere>& Arrangement::spheres() const {
    const auto* s = std::get_if<std::vector<Sphere>>(&objects_);
    require(s != nullptr, ErrorCode::kInvalidArgument, "arrangement holds chords, not spheres");
    return *s;
}

const std::vector<HyperplaneChord>& Arrangement::chords() const {
    const auto* c = std::get_if<std::vector<HyperplaneChord>>(&objects_);
    require(c != nullptr, ErrorCode::kInvalidArgument, "arrangement holds spheres, not chords");
    return *c;
}

Arrangement Arrangement::subset(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> labels;
    for (std::size_t i : keep) {
        require(i < size(), ErrorCode::kInvalidArgument, "subset index out of range");
        labels.push_back(labels_[i]);
    }
    if (kind() == ObjectKind::kSphere) {
        std::vector<Sphere> out;
        for (std::size_t i : keep) out.push_back(spheres()[i]);
        return of_spheres(dim_, std::move(out), std::move(labels));
    }
    std::vector<HyperplaneChord> out;
    for (std::size_t i : keep) out.push_back(chords()[i]);
    return of_chords(dim_, std::move(out), std::move(labels));
}

void Arrangement::validate() const {
    require(dim_ >= 1, ErrorCode::kInvalidArgument, "arrangement dimension must be positive");
    require(labels_.size() == size(), ErrorCode::kInvalidArgument,
            "label count does not match object count");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        require(seen.insert(l).second, ErrorCode::kInvalidArgument, "duplicate label '" + l + "'");
    if (kind() == ObjectKind::kSphere) {
        for (const Sphere& s : spheres()) {
            require(s.dim() == dim_, ErrorCode::kDimensionMismatch,
                    "sphere center has dimension " + std::to_string(s.dim()) + ", expected " +
                        std::to_string(dim_));
            require(std::isfinite(s.radius) && s.radius > 0.0, ErrorCode::kInvalidArgument,
                    "sphere radius must be positive and finite");
            for (double x : s.center)
                require(std::isfinite(x), ErrorCode::kInvalidArgument, "non-finite coordinate");
        }
    } else {
        for (const HyperplaneChord& c : chords()) validate_chord(c, dim_);
    }
}

double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool approx_leq(double a, double b, double eps) noexcept {
    return a <= b + eps * std::max({1.0, std::abs(a), std::abs(b)});
}

bool spheres_intersect(const Sphere& a, const Sphere& b, double eps) {
    require_same_dim(a, b);
    const double d = distance(a.center, b.center);
    return approx_leq(std::abs(a.radius - b.radius), d, eps) &&
           approx_leq(d, a.radius + b.radius, eps);
}

bool ball_contains(const Sphere& outer, const Sphere& inner, double eps) {
    require_same_dim(outer, inner);
    if (approx_leq(outer.radius, inner.radius, eps)) return false;
    return approx_leq(distance(outer.center, inner.center) + inner.radius, outer.radius, eps);
}

bool balls_overlap(const Sphere& a, const Sphere& b, double eps) {
    require_same_dim(a, b);
    return approx_leq(distance(a.center, b.center), a.radius + b.radius, eps);
}

double sphere_pair_slack(const Sphere& a, const Sphere& b) {
    const double d = distance(a.center, b.center);
    return std::min(relative_gap(d, a.radius + b.radius),
                    relative_gap(d, std::abs(a.radius - b.radius)));
}

void validate_chord(const HyperplaneChord& chord, std::size_t dim, double eps) {
    require(chord.ambient_dim() == dim + 1, ErrorCode::kDimensionMismatch,
            "chord normal has dimension " + std::to_string(chord.ambient_dim()) + ", expected " +
                std::to_string(dim + 1));
    for (double x : chord.normal)
        require(std::isfinite(x), ErrorCode::kInvalidArgument, "non-finite chord normal");
    require(std::abs(norm(chord.normal) - 1.0) <= std::max(eps, 1e-12),
            ErrorCode::kInvalidArgument, "chord normal is not a unit vector");
    require(std::isfinite(chord.offset) && std::abs(chord.offset) < 1.0,
            ErrorCode::kInvalidArgument, "chord offset must satisfy |offset| < 1");
}

namespace {

struct ChordPairGeometry {
    double gram = 0.0;       // n_a . n_b
    double det = 0.0;        // 1 - gram^2
    double min_norm_sq = 0;  // |x*|^2 of the closest point of the flat, if not parallel
};

ChordPairGeometry chord_pair_geometry(const HyperplaneChord& a, const HyperplaneChord& b) {
    ChordPairGeometry g;
    g.gram = dot(a.normal, b.normal);
    g.det = 1.0 - g.gram * g.gram;
    if (g.det > 0.0) {
        const double ca = a.offset, cb = b.offset;
        g.min_norm_sq = (ca * ca - 2.0 * g.gram * ca * cb + cb * cb) / g.det;
    }
    return g;
}

}  // namespace

bool chords_intersect(const HyperplaneChord& a, const HyperplaneChord& b, std::size_t dim,
                      double eps) {
    validate_chord(a, dim, eps);
    validate_chord(b, dim, eps);
    const ChordPairGeometry g = chord_pair_geometry(a, b);
    if (g.det <= eps) {
        // Parallel: only coincident hyperplanes meet.
        const double gap = g.gram > 0.0 ? a.offset - b.offset : a.offset + b.offset;
        return std::abs(gap) <= eps;
    }
    return approx_leq(g.min_norm_sq, 1.0, eps);
}

double chord_pair_slack(const HyperplaneChord& a, const HyperplaneChord& b) {
    const ChordPairGeometry g = chord_pair_geometry(a, b);
    if (g.det <= 1e-12) return 0.0;
    return std::min(g.det, relative_gap(g.min_norm_sq, 1.0));
}

double pole_clearance(const HyperplaneChord& chord, std::size_t dim) {
    const Point& n = chord.normal;
    const double c = chord.offset;
    const double rho = std::sqrt(std::max(0.0, 1.0 - c * c));
    Point pole(dim + 1, 0.0);
    pole[dim] = 1.0;
    const double s = dot(n, pole) - c;
    // In-plane offset of the pole's projection from the section's center c*n.
    Point w(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) w[i] = pole[i] - s * n[i] - c * n[i];
    const double wl = norm(w);
    if (wl < 1e-15) return std::sqrt(s * s + rho * rho);
    Point nearest(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) nearest[i] = c * n[i] + rho * w[i] / wl;
    return distance(pole, nearest);
}

Point stereographic_point(const Point& x) {
    const std::size_t d = x.size() - 1;
    const double denom = 1.0 - x[d];
    Point y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = x[i] / denom;
    return y;
}

Point inverse_stereographic_point(const Point& y) {
    const std::size_t d = y.size();
    const double sq = dot(y, y);
    Point x(d + 1);
    for (std::size_t i = 0; i < d; ++i) x[i] = 2.0 * y[i] / (sq + 1.0);
    x[d] = (sq - 1.0) / (sq + 1.0);
    return x;
}

Sphere stereographic_project(const HyperplaneChord& chord, std::size_t dim, double eps) {
    validate_chord(chord, dim, eps);
    require(pole_clearance(chord, dim) > eps, ErrorCode::kDegenerate,
            "section passes too close to the north pole");

    const Point& n = chord.normal;
    const double rho = std::sqrt(1.0 - chord.offset * chord.offset);
    Point center(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) center[i] = chord.offset * n[i];
    const std::vector<Point> basis = orthonormal_complement(n);
    require(basis.size() == dim, ErrorCode::kDegenerate, "could not span the chord hyperplane");

    auto on_section = [&](const Point& dir) {
        Point x = center;
        for (std::size_t i = 0; i <= dim; ++i) x[i] += rho * dir[i];
        return stereographic_point(x);
    };
    auto scaled = [](const Point& v, double s) {
        Point out = v;
        for (double& x : out) x *= s;
        return out;
    };

    // d+1 affinely independent samples: +e_1..+e_d and -e_1.
    std::vector<Point> samples;
    for (const Point& e : basis) samples.push_back(on_section(e));
    samples.push_back(on_section(scaled(basis[0], -1.0)));

    // |y|^2 - 2 a.y + b = 0  =>  [-2 y^T, 1] [a; b] = -|y|^2
    std::vector<std::vector<double>> system;
    std::vector<double> rhs;
    for (const Point& y : samples) {
        std::vector<double> row;
        for (double yi : y) row.push_back(-2.0 * yi);
        row.push_back(1.0);
        system.push_back(std::move(row));
        rhs.push_back(-dot(y, y));
    }
    require(solve_linear(system, rhs), ErrorCode::kDegenerate, "degenerate sample set");

    Sphere out;
    out.center.assign(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(dim));
    const double r2 = dot(out.center, out.center) - rhs[dim];
    require(r2 > 0.0 && std::isfinite(r2), ErrorCode::kDegenerate, "degenerate sphere fit");
    out.radius = std::sqrt(r2);

    // Validation samples: -e_1..-e_d, +e_1..+e_d and +-(sum e_i)/sqrt(d).
    std::vector<Point> checks;
    Point diag(dim + 1, 0.0);
    for (const Point& e : basis) {
        checks.push_back(on_section(e));
        checks.push_back(on_section(scaled(e, -1.0)));
        for (std::size_t i = 0; i <= dim; ++i) diag[i] += e[i];
    }
    diag = scaled(diag, 1.0 / norm(diag));
    checks.push_back(on_section(diag));
    checks.push_back(on_section(scaled(diag, -1.0)));
    for (const Point& y : checks) {
        const double err = std::abs(distance(y, out.center) - out.radius);
        require(err <= eps * std::max(1.0, out.radius), ErrorCode::kDegenerate,
                "projected section failed sphere validation");
    }
    return out;
}

HyperplaneChord inverse_stereographic(const Sphere& s, std::size_t dim, double eps) {
    require(s.dim() == dim, ErrorCode::kDimensionMismatch, "sphere dimension mismatch");
    require(std::isfinite(s.radius) && s.radius > eps, ErrorCode::kInvalidArgument,
            "sphere radius must be positive and finite");
    // Substituting y = x'/(1 - x_{d+1}) into |y|^2 - 2a.y + k = 0, k = |a|^2 - r^2,
    // and using |y|^2 = (1 + x_{d+1})/(1 - x_{d+1}) gives the hyperplane
    // -2a.x' + (1 - k) x_{d+1} = -(1 + k).
    const double k = dot(s.center, s.center) - s.radius * s.radius;
    Point m(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) m[i] = -2.0 * s.center[i];
    m[dim] = 1.0 - k;
    const double len = norm(m);
    HyperplaneChord chord;
    chord.normal.resize(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) chord.normal[i] = m[i] / len;
    chord.offset = -(1.0 + k) / len;
    if (chord.offset == 0.0) chord.offset = 0.0;  // normalise -0
    return chord;
}

Arrangement project_arrangement(const Arrangement& chords, double eps) {
    std::vector<Sphere> spheres;
    spheres.reserve(chords.size());
    for (const HyperplaneChord& c : chords.chords())
        spheres.push_back(stereographic_project(c, chords.dim(), eps));
    return Arrangement::of_spheres(chords.dim(), std::move(spheres), chords.labels());
}

}  // namespace spheresep
