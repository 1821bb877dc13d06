#include "hlab/domain_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "hlab/errors.hpp"

namespace hlab {
namespace {

constexpr double kClosedSlack = 1e-12;

double segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy));
}

bool polygon_contains(const std::vector<Point>& v, const Point& p) {
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const bool crosses = (v[i][1] > p[1]) != (v[j][1] > p[1]);
    if (crosses) {
      const double x_at = v[j][0] + (p[1] - v[j][1]) * (v[i][0] - v[j][0]) / (v[i][1] - v[j][1]);
      if (p[0] < x_at) inside = !inside;
    }
  }
  return inside;
}

std::string format_point(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace

struct DiscretizedDomain::GridCache {
  std::once_flag once;
  std::unique_ptr<InteriorGrid> grid;
};

DiscretizedDomain::DiscretizedDomain(DomainShape shape, double grid_spacing,
                                     std::optional<double> interior_margin)
    : shape_(std::move(shape)),
      spacing_(grid_spacing),
      margin_(interior_margin.value_or(4.0 * grid_spacing)),
      cache_(std::make_shared<GridCache>()) {
  if (!(spacing_ > 0.0)) throw InvalidInput("grid spacing must be positive");
  if (!(margin_ > 0.0)) throw InvalidInput("interior margin must be positive");
  if (const auto* b = std::get_if<BallShape>(&shape_)) {
    if (b->dim == 0 || !(b->radius > 0.0)) throw InvalidInput("ball needs dim ≥ 1 and radius > 0");
  } else if (const auto* p = std::get_if<PolygonShape>(&shape_)) {
    if (p->vertices.size() < 3) throw InvalidInput("polygon needs at least three vertices");
    for (const auto& v : p->vertices)
      if (v.size() != 2) throw InvalidInput("polygon vertices must be planar");
  } else if (const auto* a = std::get_if<AnnulusShape>(&shape_)) {
    if (!(a->inner > 0.0) || !(a->outer > a->inner))
      throw InvalidInput("annulus needs 0 < inner < outer");
  }
}

DiscretizedDomain DiscretizedDomain::unit_disk(double grid_spacing) {
  return DiscretizedDomain(BallShape{2, 1.0}, grid_spacing);
}
DiscretizedDomain DiscretizedDomain::unit_ball(std::size_t dim, double grid_spacing) {
  return DiscretizedDomain(BallShape{dim, 1.0}, grid_spacing);
}
DiscretizedDomain DiscretizedDomain::polygon(std::vector<Point> vertices, double grid_spacing) {
  return DiscretizedDomain(PolygonShape{std::move(vertices)}, grid_spacing);
}
DiscretizedDomain DiscretizedDomain::annulus(double inner, double outer, double grid_spacing) {
  return DiscretizedDomain(AnnulusShape{inner, outer}, grid_spacing);
}

std::size_t DiscretizedDomain::dimension() const noexcept {
  if (const auto* b = std::get_if<BallShape>(&shape_)) return b->dim;
  return 2;
}

double DiscretizedDomain::signed_boundary_distance(const Point& x) const {
  if (x.size() != dimension()) throw InvalidInput("point dimension does not match the domain");
  if (const auto* b = std::get_if<BallShape>(&shape_)) return b->radius - norm(x);
  if (const auto* a = std::get_if<AnnulusShape>(&shape_)) {
    const double r = norm(x);
    return std::min(r - a->inner, a->outer - r);
  }
  const auto& v = std::get<PolygonShape>(shape_).vertices;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) d = std::min(d, segment_distance(x, v[i], v[(i + 1) % v.size()]));
  return polygon_contains(v, x) ? d : -d;
}

bool DiscretizedDomain::contains(const Point& x) const {
  return x.size() == dimension() && signed_boundary_distance(x) > 0.0;
}

double DiscretizedDomain::boundary_distance(const Point& x) const {
  const double d = signed_boundary_distance(x);
  if (d < -kClosedSlack) throw InvalidInput("point " + format_point(x) + " lies outside the domain");
  return std::max(d, 0.0);
}

double boundary_distance(const DiscretizedDomain& domain, const Point& x) {
  return domain.boundary_distance(x);
}

std::pair<Point, Point> DiscretizedDomain::bounding_box() const {
  if (const auto* b = std::get_if<BallShape>(&shape_))
    return {Point(b->dim, -b->radius), Point(b->dim, b->radius)};
  if (const auto* a = std::get_if<AnnulusShape>(&shape_))
    return {Point{-a->outer, -a->outer}, Point{a->outer, a->outer}};
  const auto& v = std::get<PolygonShape>(shape_).vertices;
  Point lo = v.front(), hi = v.front();
  for (const auto& p : v)
    for (std::size_t k = 0; k < 2; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  return {lo, hi};
}

std::string DiscretizedDomain::describe() const {
  std::ostringstream os;
  if (const auto* b = std::get_if<BallShape>(&shape_)) {
    if (b->dim == 2 && b->radius == 1.0)
      os << "unit_disk";
    else
      os << "ball(dim=" << b->dim << ", radius=" << b->radius << ")";
  } else if (const auto* a = std::get_if<AnnulusShape>(&shape_)) {
    os << "annulus(" << a->inner << ", " << a->outer << ")";
  } else {
    os << "polygon(" << std::get<PolygonShape>(shape_).vertices.size() << " vertices)";
  }
  return os.str();
}

nlohmann::json DiscretizedDomain::to_json() const {
  nlohmann::json j;
  if (const auto* b = std::get_if<BallShape>(&shape_)) {
    j["shape"] = "ball";
    j["dim"] = b->dim;
    j["radius"] = b->radius;
  } else if (const auto* a = std::get_if<AnnulusShape>(&shape_)) {
    j["shape"] = "annulus";
    j["inner"] = a->inner;
    j["outer"] = a->outer;
  } else {
    j["shape"] = "polygon";
    j["vertices"] = std::get<PolygonShape>(shape_).vertices;
  }
  j["grid_spacing"] = spacing_;
  j["interior_margin"] = margin_;
  return j;
}

Point DiscretizedDomain::sample_interior(Rng& rng, double min_boundary_distance) const {
  if (const auto* b = std::get_if<BallShape>(&shape_)) {
    const double usable = b->radius - min_boundary_distance;
    if (!(usable > 0.0)) throw InvalidInput("sample_interior: margin exceeds the ball radius");
    Point p(b->dim);
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (auto& c : p) {
        c = rng.normal();
        n2 += c * c;
      }
    } while (n2 == 0.0);
    const double r = usable * std::pow(rng.uniform(), 1.0 / static_cast<double>(b->dim));
    return scale(p, r / std::sqrt(n2));
  }
  const auto [lo, hi] = bounding_box();
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    Point p(lo.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = rng.uniform(lo[k], hi[k]);
    const double d = signed_boundary_distance(p);
    if (d > 0.0 && d >= min_boundary_distance) return p;
  }
  throw InvalidInput("sample_interior: no admissible point found");
}

const InteriorGrid& DiscretizedDomain::grid() const {
  std::call_once(cache_->once, [this] { cache_->grid = std::make_unique<InteriorGrid>(*this); });
  return *cache_->grid;
}

// ---------------------------------------------------------------------------
// InteriorGrid

InteriorGrid::InteriorGrid(const DiscretizedDomain& domain)
    : dim_(domain.dimension()), spacing_(domain.grid_spacing()) {
  const auto [blo, bhi] = domain.bounding_box();
  lo_.resize(dim_);
  extent_.resize(dim_);
  stride_.resize(dim_);
  double cells = 1.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto imin = static_cast<std::int64_t>(std::ceil(blo[k] / spacing_));
    const auto imax = static_cast<std::int64_t>(std::floor(bhi[k] / spacing_));
    lo_[k] = imin - 1;
    extent_[k] = imax - imin + 3;
    cells *= static_cast<double>(extent_[k]);
  }
  if (cells > 6e7) throw InvalidInput("interior grid too large for the requested spacing");
  std::int64_t s = 1;
  for (std::size_t k = dim_; k-- > 0;) {
    stride_[k] = s;
    s *= extent_[k];
  }
  node_of_box_.assign(static_cast<std::size_t>(s), -1);

  Point p(dim_);
  std::vector<std::int64_t> idx(dim_, 0);
  for (std::int64_t flat = 0; flat < s; ++flat) {
    std::int64_t rem = flat;
    bool pad = false;
    for (std::size_t k = 0; k < dim_; ++k) {
      idx[k] = rem / stride_[k];
      rem %= stride_[k];
      if (idx[k] == 0 || idx[k] == extent_[k] - 1) pad = true;
      p[k] = spacing_ * static_cast<double>(lo_[k] + idx[k]);
    }
    if (pad || !domain.contains(p)) continue;
    if (domain.boundary_distance(p) < domain.interior_margin()) continue;
    node_of_box_[static_cast<std::size_t>(flat)] = static_cast<std::int32_t>(box_index_.size());
    box_index_.push_back(static_cast<std::size_t>(flat));
  }
  if (box_index_.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
    throw InvalidInput("interior grid has too many nodes");

  // Offsets over {-1, 0, 1}^dim \ {0}.
  std::vector<int> o(dim_, -1);
  while (true) {
    std::int64_t off = 0;
    int nonzero = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
      off += o[k] * stride_[k];
      nonzero += o[k] != 0;
    }
    if (nonzero > 0) {
      offsets_.push_back(off);
      offset_lengths_.push_back(spacing_ * std::sqrt(static_cast<double>(nonzero)));
    }
    std::size_t k = 0;
    while (k < dim_ && o[k] == 1) o[k++] = -1;
    if (k == dim_) break;
    ++o[k];
  }
}

Point InteriorGrid::node_point(std::size_t node) const {
  std::int64_t rem = static_cast<std::int64_t>(box_index_.at(node));
  Point p(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    p[k] = spacing_ * static_cast<double>(lo_[k] + rem / stride_[k]);
    rem %= stride_[k];
  }
  return p;
}

std::vector<std::size_t> InteriorGrid::cell_corners(const Point& p) const {
  if (p.size() != dim_) throw InvalidInput("cell_corners: dimension mismatch");
  std::vector<std::int64_t> base(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    base[k] = static_cast<std::int64_t>(std::floor(p[k] / spacing_)) - lo_[k];
  std::vector<std::size_t> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim_); ++mask) {
    std::int64_t flat = 0;
    bool ok = true;
    for (std::size_t k = 0; k < dim_; ++k) {
      const std::int64_t i = base[k] + static_cast<std::int64_t>((mask >> k) & 1U);
      if (i < 0 || i >= extent_[k]) {
        ok = false;
        break;
      }
      flat += i * stride_[k];
    }
    if (!ok) continue;
    const std::int32_t node = node_of_box_[static_cast<std::size_t>(flat)];
    if (node >= 0) out.push_back(static_cast<std::size_t>(node));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampling

std::vector<Point> sample_points(const DiscretizedDomain& domain, Rng& rng, std::size_t count,
                                 double min_boundary_distance) {
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back(domain.sample_interior(rng, min_boundary_distance));
  return pts;
}

std::vector<PointPair> sample_pairs(const DiscretizedDomain& domain, Rng& rng,
                                    const PairSamplingOptions& options) {
  std::vector<PointPair> pairs;
  pairs.reserve(options.count);
  const std::size_t uniform_count = options.count / 2;
  const double mbd = options.min_boundary_distance;
  while (pairs.size() < uniform_count) {
    Point x = domain.sample_interior(rng, mbd);
    Point y = domain.sample_interior(rng, mbd);
    if (x != y) pairs.push_back({std::move(x), std::move(y)});
  }
  const std::size_t dim = domain.dimension();
  while (pairs.size() < options.count) {
    Point x = domain.sample_interior(rng, mbd);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Point dir(dim);
      double n2 = 0.0;
      for (auto& c : dir) {
        c = rng.normal();
        n2 += c * c;
      }
      if (n2 == 0.0) continue;
      const double rho = options.short_range * rng.uniform();
      Point y = add(x, scale(dir, rho / std::sqrt(n2)));
      if (y != x && domain.contains(y) && domain.boundary_distance(y) >= mbd) {
        pairs.push_back({std::move(x), std::move(y)});
        break;
      }
    }
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// Uniform arcs

PolylineCurve cone_arc(const DiscretizedDomain& ball, const Point& x, const Point& y,
                       std::size_t pieces_per_leg) {
  const auto* shape = std::get_if<BallShape>(&ball.shape());
  if (shape == nullptr) throw InvalidInput("cone_arc requires a ball domain");
  if (!ball.contains(x) || !ball.contains(y))
    throw InvalidInput("cone_arc: endpoints must be interior points of the ball");
  if (x == y) return PolylineCurve::trivial(x);
  const double pull = 1.0 - distance(x, y) / (2.0 * shape->radius);
  const Point m = scale(add(x, y), 0.5 * pull);
  pieces_per_leg = std::max<std::size_t>(pieces_per_leg, 1);
  std::vector<Point> v;
  v.reserve(2 * pieces_per_leg + 1);
  const double n = static_cast<double>(pieces_per_leg);
  for (std::size_t i = 0; i < pieces_per_leg; ++i) v.push_back(lerp(x, m, static_cast<double>(i) / n));
  for (std::size_t i = 0; i < pieces_per_leg; ++i) v.push_back(lerp(m, y, static_cast<double>(i) / n));
  v.push_back(y);
  return PolylineCurve(std::move(v));
}

CurveFamily cone_arcs(const DiscretizedDomain& ball, std::size_t pieces_per_leg) {
  if (!ball.is_ball()) throw InvalidInput("cone_arcs requires a ball domain");
  return [ball, pieces_per_leg](const Point& x, const Point& y) {
    return std::vector<PolylineCurve>{cone_arc(ball, x, y, pieces_per_leg)};
  };
}

UniformityCertificate uniform_arc_check(const DiscretizedDomain& domain,
                                        const PolylineCurve& curve, const Point& x,
                                        const Point& y, double c,
                                        std::size_t samples_per_segment) {
  if (!(c >= 1.0)) throw InvalidInput("uniform_arc_check: c must be at least 1");
  const double scale_len = std::max({1.0, norm(x), norm(y)});
  if (distance(curve.front(), x) > 1e-12 * scale_len || distance(curve.back(), y) > 1e-12 * scale_len)
    throw InvalidInput("uniform_arc_check: curve does not join x to y");
  const auto& v = curve.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!domain.contains(v[i]))
      throw InvalidInput("uniform_arc_check: curve leaves the domain at vertex " +
                         std::to_string(i) + " " + format_point(v[i]));

  UniformityCertificate cert;
  cert.c = c;
  cert.pair_count = 1;
  cert.witness_x = x;
  cert.witness_y = y;
  const double len = curve.length();
  cert.worst_margin_i = c * distance(x, y) - len;
  cert.worst_margin_ii = std::numeric_limits<double>::infinity();
  cert.witness_z = x;

  auto visit = [&](const Point& z, double s) {
    const double m = c * domain.boundary_distance(z) - std::min(s, len - s);
    if (m < cert.worst_margin_ii) {
      cert.worst_margin_ii = m;
      cert.witness_z = z;
    }
  };
  const auto& cum = curve.cumulative_lengths();
  for (std::size_t i = 0; i < v.size(); ++i) {
    visit(v[i], cum[i]);
    if (i + 1 == v.size()) break;
    for (std::size_t j = 1; j <= samples_per_segment; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(samples_per_segment + 1);
      visit(lerp(v[i], v[i + 1], t), cum[i] + t * (cum[i + 1] - cum[i]));
    }
  }
  return cert;
}

UniformityCertificate certify_uniform_family(const DiscretizedDomain& domain,
                                             const CurveFamily& family, double c,
                                             std::span<const PointPair> pairs) {
  UniformityCertificate agg;
  agg.c = c;
  agg.worst_margin_i = std::numeric_limits<double>::infinity();
  agg.worst_margin_ii = std::numeric_limits<double>::infinity();
  double worst_overall = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pairs) {
    std::optional<UniformityCertificate> best;
    for (const auto& curve : family(x, y)) {
      auto cert = uniform_arc_check(domain, curve, x, y, c);
      if (!best || std::min(cert.worst_margin_i, cert.worst_margin_ii) >
                       std::min(best->worst_margin_i, best->worst_margin_ii))
        best = std::move(cert);
    }
    if (!best) throw InvalidInput("certify_uniform_family: family produced no curve");
    ++agg.pair_count;
    agg.worst_margin_i = std::min(agg.worst_margin_i, best->worst_margin_i);
    agg.worst_margin_ii = std::min(agg.worst_margin_ii, best->worst_margin_ii);
    const double overall = std::min(best->worst_margin_i, best->worst_margin_ii);
    if (overall < worst_overall) {
      worst_overall = overall;
      agg.witness_x = x;
      agg.witness_y = y;
      agg.witness_z = best->witness_z;
    }
  }
  if (agg.pair_count == 0) agg.worst_margin_i = agg.worst_margin_ii = 0.0;
  return agg;
}

nlohmann::json to_json(const UniformityCertificate& cert) {
  return {{"c", cert.c},
          {"pair_count", cert.pair_count},
          {"worst_margin_i", cert.worst_margin_i},
          {"worst_margin_ii", cert.worst_margin_ii},
          {"witness_x", cert.witness_x},
          {"witness_y", cert.witness_y},
          {"witness_z", cert.witness_z},
          {"pass", cert.pass()}};
}

// ---------------------------------------------------------------------------
// Integral conditions

IntegralConditionReport weight_condition_check(const DiscretizedDomain& domain,
                                                const ScalarField& weight, const Majorant& phi,
                                                const CurveFamily& family, double M,
                                                std::span<const PointPair> pairs,
                                                const IntegralConditionOptions& options) {
  if (!(M > 0.0)) throw InvalidInput("integral condition: M must be positive");
  IntegralConditionReport report;
  report.label = "weight_condition";
  report.constant = M;
  report.tolerance = options.tolerance;
  for (const auto& [x, y] : pairs) {
    ++report.pair_count;
    if (x == y) continue;  // ∫ over the trivial curve is 0 ≤ 0
    const double rhs = M * phi(distance(x, y));
    double best = std::numeric_limits<double>::infinity();
    bool any_admissible = false;
    for (const auto& curve : family(x, y)) {
      bool touches_shell = false;
      for (const auto& z : curve.vertices())
        if (domain.boundary_distance(z) < options.boundary_shell) touches_shell = true;
      if (touches_shell) continue;
      any_admissible = true;
      best = std::min(best, curve_integral(weight, curve, options.integration) / rhs);
    }
    if (!any_admissible) {
      ++report.divergence_flags;
      continue;
    }
    if (best > report.worst_ratio || report.witness_x.empty()) {
      report.worst_ratio = std::max(report.worst_ratio, best);
      report.witness_x = x;
      report.witness_y = y;
    }
  }
  return report;
}

IntegralConditionReport uniform_integral_check(const DiscretizedDomain& domain,
                                               const CurveFamily& family, double alpha, double c,
                                               std::span<const PointPair> pairs,
                                               const IntegralConditionOptions& options) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("uniform_integral_check: α must lie in (0, 1)");
  if (!(c >= 1.0)) throw InvalidInput("uniform_integral_check: c must be at least 1");
  const ScalarField weight = [&domain, alpha](const Point& z) {
    return std::pow(domain.boundary_distance(z), alpha - 1.0);
  };
  auto report = weight_condition_check(domain, weight, Majorant::power(alpha), family,
                                       2.0 * c / alpha, pairs, options);
  report.label = "uniform_integral";
  return report;
}

IntegralConditionReport lappalainen_condition_check(const DiscretizedDomain& domain,
                                                    const Majorant& phi,
                                                    const CurveFamily& family, double M,
                                                    std::span<const PointPair> pairs,
                                                    const IntegralConditionOptions& options) {
  const ScalarField weight = [&domain, &phi](const Point& z) {
    const double d = domain.boundary_distance(z);
    return phi(d) / d;
  };
  auto report = weight_condition_check(domain, weight, phi, family, M, pairs, options);
  report.label = "lappalainen_condition";
  return report;
}

nlohmann::json to_json(const IntegralConditionReport& r) {
  return {{"label", r.label},
          {"constant", r.constant},
          {"pair_count", r.pair_count},
          {"worst_ratio", r.worst_ratio},
          {"tolerance", r.tolerance},
          {"divergence_flags", r.divergence_flags},
          {"witness_x", r.witness_x},
          {"witness_y", r.witness_y},
          {"pass", r.pass()}};
}

}  // namespace hlab
