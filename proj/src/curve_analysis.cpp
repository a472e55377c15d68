#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "bubbleton/detail/parallel.hpp"
#include "bubbleton/geometry.hpp"

namespace bubbleton {

namespace {

double turn_angle(Point2 d1, Point2 d2) { return std::atan2(cross(d1, d2), dot(d1, d2)); }

// Number of distinct polygon vertices: a closed curve repeats its first sample.
std::size_t vertex_count(const PlanarCurve& curve) {
  return curve.closed ? curve.points.size() - 1 : curve.points.size();
}

void require_closure(const PlanarCurve& curve) {
  if (!curve.closed) throw Error(Errc::invalid_argument, "curve must be closed");
  if (curve.points.size() < 4) throw Error(Errc::invalid_argument, "closed curve needs at least three vertices");
  const Point2 gap = curve.points.back() - curve.points.front();
  double extent = 0.0;
  for (const Point2& p : curve.points) extent = std::max(extent, norm(p - curve.points.front()));
  if (norm(gap) > 1e-9 * std::max(1.0, extent)) throw Error(Errc::invalid_argument, "first and last samples differ");
}

}  // namespace

void refine_curve(PlanarCurve& curve, double max_turn, int max_passes, Execution exec) {
  if (!curve.evaluator) throw Error(Errc::invalid_argument, "refinement needs an evaluator");
  constexpr double kMinWidth = 1e-12;
  for (int pass = 0; pass < max_passes; ++pass) {
    const std::size_t n = vertex_count(curve);
    const std::size_t intervals = curve.points.size() - 1;
    std::vector<char> split(intervals, 0);
    auto mark = [&](std::size_t interval) {
      if (curve.params[interval + 1] - curve.params[interval] > kMinWidth) split[interval] = 1;
    };
    for (std::size_t i = 0; i < n; ++i) {
      const bool has_prev = curve.closed || i > 0;
      const bool has_next = curve.closed || i + 1 < n;
      if (!has_prev || !has_next) continue;
      const std::size_t prev = (i + n - 1) % n;
      const std::size_t next = (i + 1) % n;
      const Point2 d1 = curve.points[i] - curve.points[prev];
      const Point2 d2 = curve.points[next] - curve.points[i];
      if (std::abs(turn_angle(d1, d2)) > max_turn) {
        mark(curve.closed ? (i + intervals - 1) % intervals : i - 1);
        mark(i);
      }
    }
    std::vector<double> mids;
    for (std::size_t i = 0; i < intervals; ++i)
      if (split[i]) mids.push_back(0.5 * (curve.params[i] + curve.params[i + 1]));
    if (mids.empty()) return;

    std::vector<Point2> mid_points(mids.size());
    detail::for_each_index(mids.size(), exec, [&](std::size_t i) { mid_points[i] = curve.evaluator(mids[i]); });

    std::vector<double> params;
    std::vector<Point2> points;
    params.reserve(curve.params.size() + mids.size());
    points.reserve(params.capacity());
    std::size_t m = 0;
    for (std::size_t i = 0; i < curve.params.size(); ++i) {
      params.push_back(curve.params[i]);
      points.push_back(curve.points[i]);
      if (i < intervals && split[i]) {
        params.push_back(mids[m]);
        points.push_back(mid_points[m]);
        ++m;
      }
    }
    curve.params = std::move(params);
    curve.points = std::move(points);
  }
}

TurningNumber turning_number(const PlanarCurve& input) {
  require_closure(input);
  PlanarCurve curve = input;
  if (curve.evaluator) refine_curve(curve);

  const std::size_t n = vertex_count(curve);
  TurningNumber result;
  result.samples = n;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 d1 = curve.points[i] - curve.points[(i + n - 1) % n];
    const Point2 d2 = curve.points[(i + 1) % n] - curve.points[i];
    if (norm(d1) == 0.0 || norm(d2) == 0.0) throw Error(Errc::irregular_curve, "repeated consecutive samples");
    const double a = turn_angle(d1, d2);
    result.max_turn = std::max(result.max_turn, std::abs(a));
    total += a;
  }
  if (result.max_turn > kPi / 2.0) {
    throw Error(Errc::irregular_curve, "tangent turns by " + std::to_string(result.max_turn) +
                                           " rad between samples; winding cannot be certified");
  }
  result.raw = total / (2.0 * kPi);
  result.value = static_cast<int>(std::lround(result.raw));
  result.residual = std::abs(result.raw - result.value);
  return result;
}

// ---------------------------------------------------------------------------
// Printed turning integral
// ---------------------------------------------------------------------------

namespace {

// Value with first and second derivative in a real variable.
struct Taylor2 {
  double v = 0.0, d1 = 0.0, d2 = 0.0;

  Taylor2() = default;
  Taylor2(double value) : v(value) {}  // NOLINT(google-explicit-constructor)
  Taylor2(double value, double first, double second) : v(value), d1(first), d2(second) {}
};

Taylor2 operator+(const Taylor2& a, const Taylor2& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
Taylor2 operator-(const Taylor2& a, const Taylor2& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
Taylor2 operator*(const Taylor2& a, const Taylor2& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
Taylor2 operator/(const Taylor2& a, const Taylor2& b) {
  const double q = a.v / b.v;
  const double q1 = (a.d1 - q * b.d1) / b.v;
  const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}
Taylor2 sin(const Taylor2& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return {s, c * a.d1, c * a.d2 - s * a.d1 * a.d1};
}
Taylor2 cos(const Taylor2& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return {c, -s * a.d1, -s * a.d2 - c * a.d1 * a.d1};
}

struct CurvatureIntegrand {
  int k;
  double alpha;

  double operator()(double x) const {
    const auto [big_x, big_z] = detail::printed_curve(Taylor2(x, 1.0, 0.0), k, alpha);
    return (big_x.d1 * big_z.d2 - big_x.d2 * big_z.d1) / (big_x.d1 * big_x.d1 + big_z.d1 * big_z.d1);
  }
};

double adaptive_simpson(const CurvatureIntegrand& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double printed_turning_integral(int k, double tol) {
  const CurvatureIntegrand f{k, alpha_for_lobes(k)};
  constexpr int kPanels = 256;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double a = double(i) / kPanels;
    const double b = double(i + 1) / kPanels;
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += adaptive_simpson(f, a, b, fa, fm, fb, whole, tol / kPanels, 40);
  }
  return total / (2.0 * kPi);
}

// ---------------------------------------------------------------------------
// Self-intersections
// ---------------------------------------------------------------------------

namespace {

struct SegmentHit {
  double s;  // local parameter on the first segment
  double t;  // local parameter on the second segment
};

// Transversal intersection of [p0, p1] and [q0, q1], with a small slack on the
// local parameters so crossings through shared vertices are not lost.
std::optional<SegmentHit> intersect(Point2 p0, Point2 p1, Point2 q0, Point2 q1, double slack = 1e-9) {
  const Point2 d1 = p1 - p0;
  const Point2 d2 = q1 - q0;
  const double denom = cross(d1, d2);
  if (std::abs(denom) <= 1e-12 * norm(d1) * norm(d2)) return std::nullopt;
  const Point2 w = q0 - p0;
  const double s = cross(w, d2) / denom;
  const double t = cross(w, d1) / denom;
  if (s < -slack || s > 1.0 + slack || t < -slack || t > 1.0 + slack) return std::nullopt;
  return SegmentHit{std::clamp(s, 0.0, 1.0), std::clamp(t, 0.0, 1.0)};
}

struct ParamSegment {
  double a0, a1;
  Point2 p0, p1;
};

Intersection refine_hit(const PlanarCurve& curve, ParamSegment a, ParamSegment b, SegmentHit hit, double tol) {
  if (curve.evaluator) {
    for (int iter = 0; iter < 200 && (a.a1 - a.a0 > tol || b.a1 - b.a0 > tol); ++iter) {
      const double am = 0.5 * (a.a0 + a.a1);
      const double bm = 0.5 * (b.a0 + b.a1);
      const Point2 pa = curve.evaluator(am);
      const Point2 pb = curve.evaluator(bm);
      const ParamSegment as[2] = {{a.a0, am, a.p0, pa}, {am, a.a1, pa, a.p1}};
      const ParamSegment bs[2] = {{b.a0, bm, b.p0, pb}, {bm, b.a1, pb, b.p1}};
      bool found = false;
      for (const ParamSegment& x : as) {
        for (const ParamSegment& y : bs) {
          if (auto h = intersect(x.p0, x.p1, y.p0, y.p1)) {
            a = x;
            b = y;
            hit = *h;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) break;
    }
  }
  Intersection out;
  out.s = a.a0 + hit.s * (a.a1 - a.a0);
  out.t = b.a0 + hit.t * (b.a1 - b.a0);
  out.point = a.p0 + hit.s * (a.p1 - a.p0);
  if (out.s > out.t) std::swap(out.s, out.t);
  return out;
}

double param_distance(double u, double v, bool periodic) {
  const double d = std::abs(u - v);
  return periodic ? std::min(d, 1.0 - d) : d;
}

}  // namespace

std::vector<Intersection> self_intersections(const PlanarCurve& curve, double param_tol) {
  if (curve.points.size() < 4) return {};
  const std::size_t n = vertex_count(curve);
  const std::size_t segments = curve.closed ? n : n - 1;

  auto segment = [&](std::size_t i) {
    const std::size_t j = i + 1;  // params/points keep the repeated endpoint of a closed curve
    return ParamSegment{curve.params[i], curve.params[j], curve.points[i], curve.points[j]};
  };

  std::vector<double> lengths(segments);
  for (std::size_t i = 0; i < segments; ++i) lengths[i] = norm(segment(i).p1 - segment(i).p0);
  std::vector<double> sorted = lengths;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  double cell = sorted[sorted.size() / 2];
  if (!(cell > 0.0)) cell = *std::max_element(lengths.begin(), lengths.end());
  if (!(cell > 0.0)) return {};

  auto key = [](std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint64_t>(cy & 0xffffffff);
  };
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid;
  for (std::size_t i = 0; i < segments; ++i) {
    const ParamSegment s = segment(i);
    const auto x0 = static_cast<std::int64_t>(std::floor(std::min(s.p0.x, s.p1.x) / cell));
    const auto x1 = static_cast<std::int64_t>(std::floor(std::max(s.p0.x, s.p1.x) / cell));
    const auto y0 = static_cast<std::int64_t>(std::floor(std::min(s.p0.y, s.p1.y) / cell));
    const auto y1 = static_cast<std::int64_t>(std::floor(std::max(s.p0.y, s.p1.y) / cell));
    for (std::int64_t cx = x0; cx <= x1; ++cx)
      for (std::int64_t cy = y0; cy <= y1; ++cy) grid[key(cx, cy)].push_back(static_cast<std::uint32_t>(i));
  }

  std::unordered_set<std::uint64_t> tested;
  std::vector<Intersection> found;
  for (const auto& [cell_key, members] : grid) {
    for (std::size_t u = 0; u < members.size(); ++u) {
      for (std::size_t v = u + 1; v < members.size(); ++v) {
        std::size_t i = members[u];
        std::size_t j = members[v];
        if (i > j) std::swap(i, j);
        if (j == i + 1 || (curve.closed && i == 0 && j == segments - 1)) continue;
        if (!tested.insert((static_cast<std::uint64_t>(i) << 32) | j).second) continue;
        const ParamSegment a = segment(i);
        const ParamSegment b = segment(j);
        if (auto hit = intersect(a.p0, a.p1, b.p0, b.p1)) found.push_back(refine_hit(curve, a, b, *hit, param_tol));
      }
    }
  }

  // A crossing at a shared vertex is reported by several segment pairs.
  std::sort(found.begin(), found.end(), [](const Intersection& p, const Intersection& q) {
    return p.s < q.s || (p.s == q.s && p.t < q.t);
  });
  std::vector<Intersection> unique;
  const double merge = std::max(1e-7, 100.0 * param_tol);
  for (const Intersection& hit : found) {
    const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](const Intersection& u) {
      const bool same = param_distance(hit.s, u.s, curve.closed) <= merge && param_distance(hit.t, u.t, curve.closed) <= merge;
      const bool swapped = param_distance(hit.s, u.t, curve.closed) <= merge && param_distance(hit.t, u.s, curve.closed) <= merge;
      return same || swapped;
    });
    if (!duplicate) unique.push_back(hit);
  }
  return unique;
}

}  // namespace bubbleton
