#include "lpair/lfun.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lpair/error.hpp"
#include "lpair/parallel.hpp"

namespace lpair {
namespace {

constexpr double kRotationTolerance = 1e-8;

double rotated_real(cplx rotated, cplx l, double t) {
  if (std::abs(rotated.imag()) >= kRotationTolerance * std::max(1.0, std::abs(l))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Z rotation left imaginary residue " << rotated.imag() << " at t = " << t;
    throw NumericalError(msg.str());
  }
  return rotated.real();
}

cplx gamma_factor(cplx s, std::uint32_t q, int kappa) {
  const cplx h = 0.5 * (s + static_cast<double>(kappa));
  return std::exp(h * std::log(q / std::numbers::pi) + log_gamma(h));
}

}  // namespace

cplx dirichlet_l(cplx s, const DirichletCharacter& chi) {
  const std::uint32_t q = chi.modulus();
  if (s == cplx(1.0, 0.0)) {
    if (chi.is_principal()) throw NumericalError("dirichlet_l: pole at s = 1 for a principal character");
    cplx total;
    for (std::uint32_t a = 1; a <= q; ++a) {
      const cplx c = chi(a);
      if (c == cplx{}) continue;
      total += c * boost::math::digamma(static_cast<double>(a) / q);
    }
    return -total / static_cast<double>(q);
  }
  cplx total;
  for (std::uint32_t a = 1; a <= q; ++a) {
    const cplx c = chi(a);
    if (c == cplx{}) continue;
    total += c * hurwitz_zeta(s, static_cast<double>(a) / q);
  }
  return std::exp(-s * std::log(static_cast<double>(q))) * total;
}

cplx gauss_sum(const DirichletCharacter& chi) {
  const std::uint32_t q = chi.modulus();
  cplx tau;
  for (std::uint32_t a = 1; a <= q; ++a) {
    const cplx c = chi(a);
    if (c == cplx{}) continue;
    const double th = 2.0 * std::numbers::pi * static_cast<double>(a) / q;
    tau += c * cplx(std::cos(th), std::sin(th));
  }
  return tau;
}

LFunctionData::LFunctionData(DirichletCharacter chi) : chi_(std::move(chi)) {
  if (!chi_.is_primitive()) throw ConfigError("lfunction_data: character is not primitive");
  tau_ = lpair::gauss_sum(chi_);
  const double q = chi_.modulus();
  const cplx ik = chi_.parity() ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
  eps_ = tau_ / (ik * std::sqrt(q));
  check(std::abs(std::norm(tau_) - q) < 1e-9 * std::max(1.0, q), "lfunction_data: |tau|^2 != q");
  check(std::abs(std::abs(eps_) - 1.0) < 1e-10, "lfunction_data: |epsilon| != 1");
}

cplx completed_l(cplx s, const DirichletCharacter& chi) {
  return gamma_factor(s, chi.modulus(), chi.parity()) * dirichlet_l(s, chi);
}

double functional_equation_residual(const LFunctionData& data, double t) {
  const auto& chi = data.character();
  const cplx s(0.5, t);
  const cplx g = gamma_factor(s, chi.modulus(), chi.parity());
  const cplx l = dirichlet_l(s, chi);
  const cplx lhs = g * l;
  const cplx rhs = data.root_number() * completed_l(1.0 - s, chi.conjugate());
  return std::abs(lhs - rhs) / (std::abs(g) * std::max(1.0, std::abs(l)));
}

double hardy_theta(double t, const LFunctionData& data) {
  const double q = data.modulus();
  const cplx h(0.25 + 0.5 * data.kappa(), 0.5 * t);
  return 0.5 * t * std::log(q / std::numbers::pi) + log_gamma(h).imag() - 0.5 * std::arg(data.root_number());
}

double hardy_z(double t, const LFunctionData& data) {
  const cplx l = dirichlet_l(cplx(0.5, t), data.character());
  const double th = hardy_theta(t, data);
  return rotated_real(cplx(std::cos(th), std::sin(th)) * l, l, t);
}

// ------------------------------------------------------------ ModulusGrid

namespace {

std::vector<std::uint32_t> unit_list(std::uint32_t q) {
  std::vector<std::uint32_t> u;
  for (std::uint32_t a = 1; a <= q; ++a)
    if (std::gcd(a, q) == 1) u.push_back(a);
  return u;
}

std::vector<double> shifts_of(std::uint32_t q, const std::vector<std::uint32_t>& units) {
  std::vector<double> s;
  s.reserve(units.size());
  for (const auto a : units) s.push_back(static_cast<double>(a) / q);
  return s;
}

}  // namespace

ModulusGrid::ModulusGrid(std::uint32_t q, double max_height)
    : q_(q), units_(unit_list(q)), line_(shifts_of(q, units_), max_height) {}

void ModulusGrid::zetas(double t, std::span<cplx> out) const {
  line_.evaluate(std::abs(t), out);
  if (t < 0.0)
    for (auto& z : out) z = std::conj(z);
}

std::vector<cplx> ModulusGrid::character_values(const DirichletCharacter& chi) const {
  if (chi.modulus() != q_) throw ConfigError("ModulusGrid: character modulus mismatch");
  std::vector<cplx> v;
  v.reserve(units_.size());
  for (const auto a : units_) v.push_back(chi(a));
  return v;
}

cplx ModulusGrid::l_value(double t, std::span<const cplx> chi_values, std::span<const cplx> zetas) const {
  cplx total;
  for (std::size_t i = 0; i < zetas.size(); ++i) total += chi_values[i] * zetas[i];
  const double lq = std::log(static_cast<double>(q_));
  return std::exp(cplx(-0.5 * lq, -t * lq)) * total;
}

void ModulusGrid::sample(double T, double step) {
  if (!(T > 0.0) || !(step > 0.0)) throw ConfigError("ModulusGrid::sample: need T > 0 and step > 0");
  if (T > max_height()) throw ConfigError("ModulusGrid::sample: T beyond grid height");
  sample_half_ = static_cast<std::size_t>(std::ceil(T / step));
  sample_h_ = T / static_cast<double>(sample_half_);
  sample_T_ = T;
  const std::size_t nu = units_.size();
  table_.assign((sample_half_ + 1) * nu, cplx{});
  for (std::size_t j = 0; j <= sample_half_; ++j)
    line_.evaluate(static_cast<double>(j) * sample_h_, std::span<cplx>(table_.data() + j * nu, nu));
}

std::vector<cplx> ModulusGrid::sampled_zetas(std::size_t k) const {
  if (table_.empty()) return {};
  const std::size_t nu = units_.size();
  const bool neg = k < sample_half_;
  const std::size_t j = neg ? sample_half_ - k : k - sample_half_;
  std::vector<cplx> out(table_.begin() + static_cast<std::ptrdiff_t>(j * nu),
                        table_.begin() + static_cast<std::ptrdiff_t>((j + 1) * nu));
  if (neg)
    for (auto& z : out) z = std::conj(z);
  return out;
}

// ------------------------------------------------------------ ZFunction

ZFunction::ZFunction(LFunctionData data, std::shared_ptr<const ModulusGrid> grid)
    : data_(std::move(data)), grid_(std::move(grid)) {
  if (!grid_ || grid_->modulus() != data_.modulus()) throw ConfigError("ZFunction: grid modulus mismatch");
  chi_values_ = grid_->character_values(data_.character());
}

double ZFunction::from_zetas(double t, std::span<const cplx> zetas) const {
  const cplx l = grid_->l_value(t, chi_values_, zetas);
  const double th = hardy_theta(t, data_);
  return rotated_real(cplx(std::cos(th), std::sin(th)) * l, l, t);
}

double ZFunction::operator()(double t) const {
  thread_local std::vector<cplx> buf;
  buf.resize(grid_->units().size());
  grid_->zetas(t, buf);
  return from_zetas(t, buf);
}

// ------------------------------------------------------------ zero finding

double zero_count_main_term(std::uint32_t q, double T) {
  const double qt = static_cast<double>(q) * T;
  if (!(qt > 1.0)) throw ConfigError("zero_count_main_term: requires qT > 1");
  return T / std::numbers::pi * std::log(qt / (2.0 * std::numbers::pi * std::numbers::e));
}

double zero_count_slack(std::uint32_t q, double T) {
  return 2.0 + 2.0 * std::log(std::max(1.0, static_cast<double>(q) * T));
}

namespace {

ZeroRecord refine(const ZFunction& z, double a, double b, double fa, double fb) {
  if (fa == 0.0) return {a, 0.0, 1};
  std::uintmax_t iters = 200;
  auto tol = [](double lo, double hi) { return hi - lo <= 2.0 * kBracketHalfWidth; };
  const auto [lo, hi] = boost::math::tools::toms748_solve([&z](double t) { return z(t); }, a, b, fa, fb, tol, iters);
  check(hi - lo <= 2.0 * kBracketHalfWidth, "find_zeros: bracket did not shrink below tolerance");
  return {0.5 * (lo + hi), 0.5 * (hi - lo), 1};
}

// values[k] = Z((k − half)·h) for k = 0..2·half.
std::vector<ZeroRecord> zeros_from_samples(const ZFunction& z, const std::vector<double>& values, std::size_t half,
                                           double h) {
  std::vector<ZeroRecord> out;
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const double a = (static_cast<double>(k) - static_cast<double>(half)) * h;
    const double b = (static_cast<double>(k + 1) - static_cast<double>(half)) * h;
    const double fa = values[k];
    const double fb = values[k + 1];
    if (fb == 0.0) {
      out.push_back({b, 0.0, 1});
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0) && fa != 0.0) out.push_back(refine(z, a, b, fa, fb));
  }
  return out;
}

ZeroScan finish(ZeroScan s, std::uint32_t q) {
  s.expected = static_cast<double>(q) * s.T > 1.0 ? zero_count_main_term(q, s.T) : 0.0;
  s.slack = zero_count_slack(q, s.T);
  s.complete = std::abs(static_cast<double>(s.zeros.size()) - s.expected) <= s.slack;
  return s;
}

ZeroScan scan_direct(const ZFunction& z, double T, double step) {
  ZeroScan s;
  s.T = T;
  const std::size_t half = static_cast<std::size_t>(std::ceil(T / step));
  const double h = T / static_cast<double>(half);
  s.grid_step = h;
  std::vector<double> values(2 * half + 1);
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] = z((static_cast<double>(k) - static_cast<double>(half)) * h);
  s.zeros = zeros_from_samples(z, values, half, h);
  return finish(std::move(s), z.data().modulus());
}

ZeroScan scan_sampled(const ZFunction& z, const ModulusGrid& grid) {
  ZeroScan s;
  s.T = grid.sample_height();
  s.grid_step = grid.sample_step();
  const std::size_t n = grid.sample_points();
  const std::size_t half = n / 2;
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto zs = grid.sampled_zetas(k);
    values[k] = z.from_zetas((static_cast<double>(k) - static_cast<double>(half)) * s.grid_step, zs);
  }
  s.zeros = zeros_from_samples(z, values, half, s.grid_step);
  return finish(std::move(s), z.data().modulus());
}

void validate_scan_args(double T, double grid_step) {
  if (T < 0.0) throw ConfigError("find_zeros: T must be nonnegative");
  if (!(grid_step > 0.0) || grid_step > 0.1) throw ConfigError("find_zeros: grid_step must be in (0, 0.1]");
  if (T > kMaxHeight) throw ConfigError("find_zeros: T beyond the accuracy envelope");
}

ZeroScan with_rescans(const ZFunction& z, ZeroScan first, double T) {
  ZeroScan s = std::move(first);
  for (int i = 0; i < 3 && !s.complete; ++i) s = scan_direct(z, T, s.grid_step / 2.0);
  return s;
}

struct ScanJob {
  const std::vector<DirichletCharacter>* prim;
  const std::vector<std::size_t>* reps;
  const std::shared_ptr<const ModulusGrid>* grid;
  std::vector<ZeroScan>* scans;
  double T;
  std::uint32_t q;

  void operator()(std::size_t i) const {
    if (T == 0.0) {
      (*scans)[i] = finish(ZeroScan{}, q);
      return;
    }
    const ZFunction z(LFunctionData((*prim)[(*reps)[i]]), *grid);
    (*scans)[i] = with_rescans(z, scan_sampled(z, **grid), T);
  }
};

}  // namespace

ZeroScan find_zeros(const ZFunction& z, double T, double grid_step) {
  validate_scan_args(T, grid_step);
  if (T == 0.0) return finish(ZeroScan{}, z.data().modulus());
  return with_rescans(z, scan_direct(z, T, grid_step), T);
}

ZeroScan find_zeros(const LFunctionData& data, double T, double grid_step) {
  validate_scan_args(T, grid_step);
  if (T == 0.0) return finish(ZeroScan{}, data.modulus());
  auto grid = std::make_shared<const ModulusGrid>(data.modulus(), std::max(T, 1.0));
  return find_zeros(ZFunction(data, grid), T, grid_step);
}

std::vector<CharacterZeros> scan_modulus(std::uint32_t q, double T, double grid_step, unsigned jobs) {
  validate_scan_args(T, grid_step);
  const CharacterGroup group(q);
  std::vector<DirichletCharacter> prim = group.primitive_characters();
  if (prim.empty()) return {};

  // One representative per conjugate pair.
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < prim.size(); ++i)
    if (prim[i].conjugate().index() >= prim[i].index()) reps.push_back(i);

  auto grid = std::make_shared<ModulusGrid>(q, std::max(T, 1.0));
  if (T > 0.0) grid->sample(T, grid_step);
  std::shared_ptr<const ModulusGrid> shared = grid;

  std::vector<ZeroScan> scans(reps.size());
  const ScanJob job{&prim, &reps, &shared, &scans, T, q};
  parallel_for(reps.size(), jobs, job);

  // A real character's zero set is symmetric about 0; the two halves were
  // refined independently, so the lower half is replaced by the mirror of
  // the upper one when the counts agree.
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!prim[reps[i]].is_real()) continue;
    auto& zs = scans[i].zeros;
    const auto mid = std::partition_point(zs.begin(), zs.end(), [](const ZeroRecord& z) { return z.ordinate <= 0.0; });
    const auto n_neg = static_cast<std::size_t>(mid - zs.begin());
    const auto n_pos = zs.size() - n_neg;
    if (n_neg != n_pos) continue;
    for (std::size_t k = 0; k < n_pos; ++k) {
      const ZeroRecord& up = zs[n_neg + k];
      zs[n_neg - 1 - k] = {-up.ordinate, up.bracket, up.multiplicity};
    }
  }

  std::vector<CharacterZeros> out;
  out.reserve(prim.size());
  std::vector<std::ptrdiff_t> slot(prim.size(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) slot[reps[i]] = static_cast<std::ptrdiff_t>(i);
  for (std::size_t i = 0; i < prim.size(); ++i) {
    if (slot[i] >= 0) {
      out.push_back({prim[i], scans[static_cast<std::size_t>(slot[i])]});
      continue;
    }
    const auto conj_index = prim[i].conjugate().index();
    std::size_t r = 0;
    while (prim[reps[r]].index() != conj_index) ++r;
    ZeroScan s = scans[r];
    for (auto& z : s.zeros) z.ordinate = -z.ordinate;
    std::reverse(s.zeros.begin(), s.zeros.end());
    // (−T, T] maps to [−T, T); a zero exactly at ±T is not expected.
    out.push_back({prim[i], std::move(s)});
  }
  return out;
}

}  // namespace lpair
