#include "ossmax/types.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace ossmax {

std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw ValidationError("cannot format real");
  return std::string(buf, end);
}

double dot(ConstVectorView a, ConstVectorView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double l1_norm(ConstVectorView v) {
  double s = 0.0;
  for (double e : v) s += std::abs(e);
  return s;
}

double l2_norm(ConstVectorView v) { return std::sqrt(dot(v, v)); }

bool all_finite(ConstVectorView v) {
  for (double e : v) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

Vector axpy(ConstVectorView x, double s, ConstVectorView d) {
  Vector out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * d[i];
  return out;
}

void require_dimension(ConstVectorView v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw ValidationError(std::string(what) + ": expected dimension " +
                          std::to_string(n) + ", got " +
                          std::to_string(v.size()));
  }
}

}  // namespace ossmax
