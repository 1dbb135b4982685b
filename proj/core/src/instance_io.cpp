#include "ossmax/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "ossmax/coverage.hpp"
#include "ossmax/quadratic.hpp"

namespace ossmax {
namespace {

constexpr std::string_view kMagic = "ossmax-instance";
constexpr int kVersion = 1;

template <typename Range>
void write_reals(std::ostream& out, const Range& values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ' ';
    out << format_real(v);
    first = false;
  }
}

// Line-oriented tokenizer: skips blank lines and '#' comments.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::vector<std::string> line() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_no_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    fail("unexpected end of input");
  }

  // A line starting with `key`; returns the remaining tokens.
  std::vector<std::string> keyed(std::string_view key) {
    auto tokens = line();
    if (tokens.front() != key) {
      fail("expected '" + std::string(key) + "', found '" + tokens.front() + "'");
    }
    tokens.erase(tokens.begin());
    return tokens;
  }

  double real(const std::string& tok) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("bad real '" + tok + "'");
    }
    return v;
  }

  std::size_t count(const std::string& tok) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("bad count '" + tok + "'");
    }
    return v;
  }

  Vector reals(const std::vector<std::string>& tokens, std::size_t expected,
               std::string_view what) {
    if (tokens.size() != expected) {
      fail(std::string(what) + ": expected " + std::to_string(expected) +
           " values, got " + std::to_string(tokens.size()));
    }
    Vector out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(real(t));
    return out;
  }

  std::size_t single_count(std::string_view key) {
    auto rest = keyed(key);
    if (rest.size() != 1) fail(std::string(key) + " takes one value");
    return count(rest.front());
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ValidationError("instance line " + std::to_string(line_no_) + ": " +
                          message);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

void write_polytope(std::ostream& out, const Polytope& p) {
  out << "polytope " << p.kind() << '\n';
  if (const auto* box = dynamic_cast<const BoxPolytope*>(&p)) {
    out << "upper ";
    write_reals(out, box->upper());
    out << '\n';
  } else if (const auto* card = dynamic_cast<const CardinalityPolytope*>(&p)) {
    out << "budget " << card->budget() << '\n';
  } else if (const auto* ml = dynamic_cast<const MonotoneLinearPolytope*>(&p)) {
    out << "order " << ml->order().size() << '\n';
    for (const auto& [lo, hi] : ml->order()) out << lo << ' ' << hi << '\n';
  } else {
    throw ValidationError("write_instance: unsupported polytope kind");
  }
}

std::shared_ptr<const Polytope> read_polytope(Reader& r, std::size_t n) {
  auto kind = r.keyed("polytope");
  if (kind.size() != 1) r.fail("polytope takes one kind");
  if (kind[0] == "box") {
    return std::make_shared<BoxPolytope>(r.reals(r.keyed("upper"), n, "upper"));
  }
  if (kind[0] == "cardinality") {
    return std::make_shared<CardinalityPolytope>(n, r.single_count("budget"));
  }
  if (kind[0] == "monotone-linear") {
    const std::size_t pairs = r.single_count("order");
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < pairs; ++i) {
      auto tokens = r.line();
      if (tokens.size() != 2) r.fail("order pair needs two indices");
      order.emplace_back(r.count(tokens[0]), r.count(tokens[1]));
    }
    return std::make_shared<MonotoneLinearPolytope>(n, std::move(order));
  }
  r.fail("unknown polytope kind '" + kind[0] + "'");
}

}  // namespace

std::string objective_kind(const Objective& objective) {
  if (dynamic_cast<const QuadraticSemiMetricObjective*>(&objective)) {
    return "quadratic-semimetric";
  }
  if (dynamic_cast<const CoverageMultilinearObjective*>(&objective)) {
    return "coverage";
  }
  throw ValidationError("objective is not one of the serialisable families");
}

void write_instance(std::ostream& out, const Instance& instance) {
  if (!instance.objective || !instance.polytope) {
    throw ValidationError("write_instance: incomplete instance");
  }
  const Objective& obj = *instance.objective;
  const std::size_t n = obj.dimension();
  out << "format " << kMagic << ' ' << kVersion << '\n';
  out << "kind " << objective_kind(obj) << '\n';
  out << "dimension " << n << '\n';
  if (const auto* q = dynamic_cast<const QuadraticSemiMetricObjective*>(&obj)) {
    out << "sigma " << format_real(q->sigma_claimed()) << '\n';
    out << "matrix\n";
    for (std::size_t i = 0; i < n; ++i) {
      write_reals(out, std::span<const double>(q->matrix()).subspan(i * n, n));
      out << '\n';
    }
    out << "linear ";
    write_reals(out, q->linear());
    out << '\n';
  } else {
    const auto& c = dynamic_cast<const CoverageMultilinearObjective&>(obj);
    out << "elements " << c.element_count() << '\n';
    out << "weights ";
    write_reals(out, c.weights());
    out << '\n';
    for (const auto& set : c.sets()) {
      out << "cover " << set.size();
      for (std::size_t e : set) out << ' ' << e;
      out << '\n';
    }
  }
  write_polytope(out, *instance.polytope);
  out << "end\n";
}

std::string instance_to_string(const Instance& instance) {
  std::ostringstream ss;
  write_instance(ss, instance);
  return ss.str();
}

Instance read_instance(std::istream& in) {
  Reader r(in);
  auto header = r.keyed("format");
  if (header.size() != 2 || header[0] != kMagic ||
      header[1] != std::to_string(kVersion)) {
    r.fail("unsupported format header");
  }
  auto kind = r.keyed("kind");
  if (kind.size() != 1) r.fail("kind takes one value");
  const std::size_t n = r.single_count("dimension");
  if (n == 0) r.fail("dimension must be >= 1");

  Instance instance;
  if (kind[0] == "quadratic-semimetric") {
    auto sigma_tok = r.keyed("sigma");
    if (sigma_tok.size() != 1) r.fail("sigma takes one value");
    const double sigma = r.real(sigma_tok[0]);
    if (!r.keyed("matrix").empty()) r.fail("matrix rows follow on new lines");
    std::vector<double> m;
    m.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      Vector row = r.reals(r.line(), n, "matrix row");
      m.insert(m.end(), row.begin(), row.end());
    }
    Vector b = r.reals(r.keyed("linear"), n, "linear");
    instance.objective = std::make_shared<QuadraticSemiMetricObjective>(
        std::move(m), std::move(b), sigma);
  } else if (kind[0] == "coverage") {
    const std::size_t m = r.single_count("elements");
    Vector w = r.reals(r.keyed("weights"), m, "weights");
    std::vector<std::vector<std::size_t>> sets(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto tokens = r.keyed("cover");
      if (tokens.empty()) r.fail("cover needs a count");
      const std::size_t k = r.count(tokens[0]);
      if (tokens.size() != k + 1) r.fail("cover count does not match entries");
      for (std::size_t j = 1; j <= k; ++j) sets[i].push_back(r.count(tokens[j]));
    }
    instance.objective = std::make_shared<CoverageMultilinearObjective>(
        std::move(w), std::move(sets));
  } else {
    r.fail("unknown kind '" + kind[0] + "'");
  }
  instance.polytope = read_polytope(r, n);
  if (!r.keyed("end").empty()) r.fail("trailing tokens after end");
  return instance;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  return read_instance(in);
}

void write_instance_file(const std::string& path, const Instance& instance) {
  const std::string text = instance_to_string(instance);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write instance file '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace ossmax
