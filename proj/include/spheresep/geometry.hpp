#pragma once

// Spheres in R^d, hyperplane sections of the unit disc in R^{d+1}, the
// predicates that define their intersection graphs, and stereographic
// projection between the two models.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace spheresep {

using Point = std::vector<double>;

inline constexpr double kDefaultEps = 1e-9;

struct Sphere {
    Point center;
    double radius = 0.0;

    std::size_t dim() const noexcept { return center.size(); }
};

/// The slice {x : normal . x = offset} of the closed unit disc D^d in R^{d+1}.
/// Its boundary (the section with S^d) is a (d-1)-sphere.
struct HyperplaneChord {
    Point normal;
    double offset = 0.0;

    std::size_t ambient_dim() const noexcept { return normal.size(); }
};

enum class ObjectKind { kSphere, kChord };

/// Homogeneous, labelled collection of spheres in R^dim or chords of S^dim.
class Arrangement {
public:
    Arrangement() = default;

    static Arrangement of_spheres(std::size_t dim, std::vector<Sphere> spheres,
                                  std::vector<std::string> labels = {});
    static Arrangement of_chords(std::size_t dim, std::vector<HyperplaneChord> chords,
                                 std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept;
    ObjectKind kind() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    // Both throw kInvalidArgument if the arrangement holds the other kind.
    const std::vector<Sphere>& spheres() const;
    const std::vector<HyperplaneChord>& chords() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Arrangement restricted to `keep` (in that order), labels carried along.
    Arrangement subset(const std::vector<std::size_t>& keep) const;

private:
    void validate() const;

    std::size_t dim_ = 0;
    std::variant<std::vector<Sphere>, std::vector<HyperplaneChord>> objects_;
    std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t n);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double distance(const Point& a, const Point& b);

/// a <= b up to eps relative to max(1, |a|, |b|).
bool approx_leq(double a, double b, double eps) noexcept;

/// Boundaries meet: |r_a - r_b| <= |c_a - c_b| <= r_a + r_b. Tangency counts.
bool spheres_intersect(const Sphere& a, const Sphere& b, double eps = kDefaultEps);

/// ball(outer) contains ball(inner) and outer is strictly larger. A sphere
/// never contains itself or a congruent copy of itself.
bool ball_contains(const Sphere& outer, const Sphere& inner, double eps = kDefaultEps);

/// The closed balls share a point.
bool balls_overlap(const Sphere& a, const Sphere& b, double eps = kDefaultEps);

/// Smallest relative gap between |c_a - c_b| and the thresholds r_a + r_b and
/// |r_a - r_b|. Generators keep this above a margin.
double sphere_pair_slack(const Sphere& a, const Sphere& b);

bool chords_intersect(const HyperplaneChord& a, const HyperplaneChord& b, std::size_t dim,
                      double eps = kDefaultEps);

/// Relative gap of the chord predicate from its decision boundary.
double chord_pair_slack(const HyperplaneChord& a, const HyperplaneChord& b);

/// Euclidean distance from the north pole e_{d+1} to the section H cap S^d.
double pole_clearance(const HyperplaneChord& chord, std::size_t dim);

void validate_chord(const HyperplaneChord& chord, std::size_t dim, double eps = kDefaultEps);

/// f(x) = (x_1..x_d) / (1 - x_{d+1}) for x on S^d minus the north pole.
Point stereographic_point(const Point& x);
/// Inverse of stereographic_point: R^d -> S^d minus the north pole.
Point inverse_stereographic_point(const Point& y);

/// Image of the section H cap S^d under stereographic projection, recovered
/// by fitting a sphere through projected sample points and validated on
/// 2(d+1) further samples.
Sphere stereographic_project(const HyperplaneChord& chord, std::size_t dim,
                             double eps = kDefaultEps);

/// Chord whose section projects onto `s`.
HyperplaneChord inverse_stereographic(const Sphere& s, std::size_t dim, double eps = kDefaultEps);

/// Objectwise stereographic_project; labels preserved.
Arrangement project_arrangement(const Arrangement& chords, double eps = kDefaultEps);

}  // namespace spheresep
