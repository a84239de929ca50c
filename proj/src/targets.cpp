#include "subord/targets.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace subord {

namespace {

constexpr std::array<std::pair<TargetKind, std::string_view>, 7> kNames{{
    {TargetKind::Sqrt, "Sqrt"},
    {TargetKind::Janowski, "Janowski"},
    {TargetKind::Exp, "Exp"},
    {TargetKind::Rational0, "Rational0"},
    {TargetKind::Sine, "Sine"},
    {TargetKind::Cardioid, "Cardioid"},
    {TargetKind::Lune, "Lune"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

MembershipVerdict verdict(double margin, double band) {
  Membership status = Membership::Boundary;
  if (margin > band) status = Membership::Inside;
  if (margin < -band) status = Membership::Outside;
  return {status, margin, band};
}

void require_band(double band) {
  if (!(band > 0.0)) throw std::invalid_argument("boundary band must be positive");
}

}  // namespace

std::string_view to_string(TargetKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

std::optional<TargetKind> parse_target_kind(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (iequals(n, name)) return k;
  return std::nullopt;
}

std::string_view to_string(Membership status) {
  switch (status) {
    case Membership::Inside: return "inside";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "?";
}

TargetFunction::TargetFunction(TargetKind kind) : kind_(kind) {
  if (kind == TargetKind::Janowski)
    throw std::invalid_argument("Janowski target needs parameters A and B");
}

TargetFunction TargetFunction::janowski(double a, double b) {
  if (!(-1.0 < b && b < a && a < 1.0))
    throw std::invalid_argument("Janowski parameters must satisfy -1 < B < A < 1");
  return TargetFunction(TargetKind::Janowski, a, b);
}

Complex TargetFunction::operator()(Complex z) const {
  switch (kind_) {
    case TargetKind::Sqrt:
      return std::sqrt(1.0 + z);
    case TargetKind::Janowski:
      return (1.0 + a_ * z) / (1.0 + b_ * z);
    case TargetKind::Exp:
      return std::exp(z);
    case TargetKind::Rational0: {
      constexpr double k = kRationalPole;
      return 1.0 + (z / k) * ((k + z) / (k - z));
    }
    case TargetKind::Sine:
      return 1.0 + std::sin(z);
    case TargetKind::Cardioid:
      return 1.0 + z * (4.0 + 2.0 * z) / 3.0;
    case TargetKind::Lune:
      return z + std::sqrt(1.0 + z * z);
  }
  return {};
}

std::string TargetFunction::name() const {
  if (kind_ != TargetKind::Janowski) return std::string(to_string(kind_));
  char buf[96];
  std::snprintf(buf, sizeof buf, "Janowski(A=%.17g,B=%.17g)", a_, b_);
  return buf;
}

Complex eval_target(const TargetFunction& target, Complex z) { return target(z); }

Endpoints endpoints(const TargetFunction& target) {
  return {target(Complex{-1.0, 0.0}).real(), target(Complex{1.0, 0.0}).real()};
}

std::vector<Complex> boundary_curve(const TargetFunction& target, std::size_t n) {
  if (n < 4) throw std::invalid_argument("boundary_curve needs at least 4 samples");
  return sample_on_circle(target, n);
}

Disk janowski_disk(double a, double b) {
  const double d = 1.0 - b * b;
  return {Complex{(1.0 - a * b) / d, 0.0}, (a - b) / d};
}

std::optional<MembershipVerdict> contains_closed_form(const TargetFunction& target, Complex w,
                                                      double band) {
  require_band(band);
  switch (target.kind()) {
    case TargetKind::Sqrt: {
      // |w^2 - 1| < 1, right lobe; level set scaled by |grad| = |2w|
      const double level = 1.0 - std::abs(w * w - 1.0);
      const double grad = 2.0 * std::abs(w);
      const double lobe = grad > 0.0 ? level / grad : 0.0;
      return verdict(std::min(lobe, w.real()), band);
    }
    case TargetKind::Janowski: {
      const Disk disk = janowski_disk(target.a(), target.b());
      return verdict(disk.radius - std::abs(w - disk.center), band);
    }
    case TargetKind::Exp: {
      // |log w| < 1; |d log w / dw| = 1/|w|
      if (w == Complex{}) return verdict(-1.0, band);
      return verdict((1.0 - std::abs(std::log(w))) * std::abs(w), band);
    }
    default:
      return std::nullopt;
  }
}

MembershipVerdict contains(const TargetFunction& target, Complex w, double band) {
  require_band(band);
  if (auto closed = contains_closed_form(target, w, band)) return *closed;
  return RegionOracle(target).classify_by_winding(w, band);
}

RegionOracle::RegionOracle(TargetFunction target, std::size_t n)
    : target_(std::move(target)) {
  if (n < 16) throw std::invalid_argument("winding-number oracle needs at least 16 samples");
  boundary_ = sample_on_circle(target_, n);
}

CurveProbe RegionOracle::probe(Complex w) const {
  return probe_closed_curve(target_, boundary_, w);
}

MembershipVerdict RegionOracle::classify_by_winding(Complex w, double band) const {
  require_band(band);
  const CurveProbe p = probe(w);
  const double margin = p.winding == 1 ? p.distance : -p.distance;
  return verdict(margin, band);
}

MembershipVerdict RegionOracle::classify(Complex w, double band) const {
  if (auto closed = contains_closed_form(target_, w, band)) return *closed;
  return classify_by_winding(w, band);
}

}  // namespace subord
