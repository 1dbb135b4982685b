#include "run_record.hpp"

#include "ossmax/types.hpp"

namespace ossmax::cli {
namespace {

std::string cell(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

const std::string& csv_header() {
  static const std::string header =
      "instance,solver,alpha,epsilon,eta,sigma,delta_tol,value_tol,batch,"
      "theta,lipschitz,diameter,seed,n,value,opt_lower,opt_upper,grid_value,"
      "ratio,threshold,adaptive_rounds,outer_rounds,inner_rounds,"
      "value_queries,gradient_queries,wall_seconds,status";
  return header;
}

void write_csv_row(std::ostream& out, const RunRecord& r) {
  const SolverConfig& c = r.config;
  out << quoted(r.instance) << ',' << r.solver << ',' << format_real(c.alpha)
      << ',' << format_real(c.epsilon) << ',' << format_real(c.eta) << ','
      << format_real(c.sigma) << ',' << format_real(c.delta_tol) << ','
      << format_real(c.value_tol) << ',' << c.spg_batch << ','
      << format_real(c.noise_theta) << ',' << format_real(c.lipschitz_L) << ','
      << format_real(c.diameter_D) << ',' << c.seed << ',' << r.n << ','
      << cell(r.value) << ',' << cell(r.opt_lower) << ',' << cell(r.opt_upper)
      << ',' << cell(r.grid_value) << ',' << cell(r.ratio) << ','
      << cell(r.threshold) << ',' << r.adaptive_rounds << ',' << r.outer_rounds
      << ',' << r.inner_rounds << ',' << r.value_queries << ','
      << r.gradient_queries << ',' << format_real(r.wall_seconds) << ','
      << quoted(r.status) << '\n';
}

}  // namespace ossmax::cli
