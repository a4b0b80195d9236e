#include "core/sim.hpp"

#include <cmath>

#include "core/closed_form.hpp"

namespace tc {

FieldSpec FieldSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("field spec must be fock:<m> or coherent:<alpha>, got " + text);
  const std::string kind = text.substr(0, colon);
  const std::string value = text.substr(colon + 1);
  FieldSpec spec;
  try {
    if (kind == "fock") {
      spec.kind = Kind::Fock;
      size_t used = 0;
      spec.fock_n = std::stoi(value, &used);
      if (used != value.size() || spec.fock_n < 0) throw std::invalid_argument(value);
    } else if (kind == "coherent") {
      spec.kind = Kind::Coherent;
      size_t used = 0;
      spec.alpha = std::stod(value, &used);
      if (used != value.size() || !(spec.alpha >= 0.0)) throw std::invalid_argument(value);
    } else {
      throw std::invalid_argument(kind);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad field spec: " + text);
  }
  return spec;
}

int required_nmax(double alpha, int nmax, double tol) {
  // Poisson weights p_m = e^{-a^2} a^{2m} / m!, accumulated until the tail fits.
  const double mean = alpha * alpha;
  double p = std::exp(-mean);
  double cumulative = p;
  int m = 0;
  const int cap = 4096;
  while (1.0 - cumulative >= tol && m < cap) {
    ++m;
    p *= mean / m;
    cumulative += p;
  }
  if (1.0 - cumulative >= tol)
    throw TruncationError("required_nmax: coherent field does not fit under the cutoff cap");
  return std::max(nmax, m);
}

Vector initial_state(const InitialState& init, int n, int nmax) {
  if (static_cast<int>(init.atoms.size()) != n)
    throw std::invalid_argument("initial_state: atom string must have length " +
                                std::to_string(n));
  int b = 0;
  for (int i = 0; i < n; ++i) {
    const char c = init.atoms[i];
    if (c != 'u' && c != 'd')
      throw std::invalid_argument("initial_state: atom string must use only u and d");
    if (c == 'd') b |= 1 << (n - 1 - i);
  }

  Vector field = Vector::Zero(nmax + 1);
  if (init.field.kind == FieldSpec::Kind::Fock) {
    if (init.field.fock_n > nmax)
      throw TruncationError("initial_state: fock level above the photon cutoff");
    field(init.field.fock_n) = 1.0;
  } else {
    const double alpha = init.field.alpha;
    double c = std::exp(-0.5 * alpha * alpha);
    double tail = 1.0;
    for (int m = 0; m <= nmax; ++m) {
      if (m > 0) c *= alpha / std::sqrt(double(m));
      field(m) = c;
      tail -= c * c;
    }
    if (tail >= kCoherentTailTol)
      throw TruncationError("initial_state: coherent tail above cutoff exceeds tolerance");
    field.normalize();
  }

  Vector psi = Vector::Zero(product_dim(n, nmax));
  psi.segment(b * (nmax + 1), nmax + 1) = field;
  return psi;
}

TimeSeriesRecord observe(const Vector& psi, double t, int n, int nmax) {
  TimeSeriesRecord rec;
  rec.t = t;
  rec.populations.assign(atomic_dim(n), 0.0);
  double norm2 = 0.0;
  for (int b = 0; b < atomic_dim(n); ++b) {
    for (int m = 0; m <= nmax; ++m) {
      const double w = std::norm(psi(product_index(b, m, nmax)));
      rec.populations[b] += w;
      rec.photons += m * w;
      norm2 += w;
    }
    rec.spin_z += spin_z_value(b, n) * rec.populations[b];
  }
  rec.norm_deficit = std::abs(std::sqrt(norm2) - 1.0);
  return rec;
}

EvolveResult evolve(const SimConfig& cfg) {
  ModelParams params = cfg.params;
  validate(params);
  if (params.delta != params.omega)
    throw OffResonanceError("evolve: closed-form evolution requires delta == omega");
  if (!(cfg.grid.dt > 0.0))
    throw std::invalid_argument("evolve: dt must be > 0");
  if (cfg.grid.end < cfg.grid.start)
    throw std::invalid_argument("evolve: t_end must be >= t_start");
  if (cfg.grid.in_inverse_g && params.g == 0.0)
    throw std::invalid_argument("evolve: time unit 1/g needs g != 0");

  if (cfg.init.field.kind == FieldSpec::Kind::Coherent && cfg.auto_extend_nmax) {
    params.nmax = required_nmax(cfg.init.field.alpha, params.nmax);
    // Columns within n_atoms levels of the cutoff evolve truncated; push the
    // cutoff until their excitation-weighted weight is far below the norm
    // and <E> conservation budgets.
    params.nmax = required_nmax(cfg.init.field.alpha, params.nmax, 1e-15) + params.n_atoms;
  }

  const Vector psi0 = initial_state(cfg.init, params.n_atoms, params.nmax);

  EvolveResult out;
  out.params = params;
  const double scale = cfg.grid.in_inverse_g ? 1.0 / params.g : 1.0;
  const long steps = std::lround(std::floor((cfg.grid.end - cfg.grid.start) / cfg.grid.dt + 1e-9));
  out.records.reserve(steps + 1);
  for (long k = 0; k <= steps; ++k) {
    const double t = cfg.grid.start + k * cfg.grid.dt;
    const Vector psi = apply_evolution(params, t * scale, psi0);
    out.records.push_back(observe(psi, t, params.n_atoms, params.nmax));
  }
  return out;
}

}  // namespace tc
