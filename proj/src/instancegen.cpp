#include "hfstsp/instancegen.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

namespace hfstsp {

std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::uniform: return "uniform";
    case GenKind::one_center: return "1c";
    case GenKind::two_center: return "2c";
  }
  return "?";
}

GenKind gen_kind_from_string(const std::string& s) {
  if (s == "uniform") return GenKind::uniform;
  if (s == "1c" || s == "one_center") return GenKind::one_center;
  if (s == "2c" || s == "two_center") return GenKind::two_center;
  throw std::invalid_argument("unknown generator kind: " + s);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double Rng::normal(double mean, double stddev) {
  const double u1 = 1.0 - unit();  // (0, 1], keeps log finite
  const double u2 = unit();
  const double z =
      std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

namespace {

Point draw_point(GenKind kind, Rng& rng) {
  switch (kind) {
    case GenKind::uniform: {
      const double x = double(rng.below(101));
      const double y = double(rng.below(101));
      return {x, y};
    }
    case GenKind::one_center: {
      const double a = rng.unit() * 2.0 * std::numbers::pi;
      const double r = rng.normal(0.0, 50.0);
      return {r * std::cos(a), r * std::sin(a)};
    }
    case GenKind::two_center: {
      const double a = rng.unit() * 2.0 * std::numbers::pi;
      const double r = rng.normal(0.0, 50.0);
      Point p{r * std::cos(a), r * std::sin(a)};
      if (rng.coin()) p.x += 200.0;
      return p;
    }
  }
  throw std::logic_error("unreachable");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Instance generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("gen spec: n must be >= 1");
  if (!(spec.alpha > 0.0))
    throw std::invalid_argument("gen spec: alpha must be > 0");
  Rng rng(spec.seed);
  Instance inst;
  inst.n = spec.n;
  inst.alpha = spec.alpha;
  inst.coords.reserve(spec.n + 1);
  for (int i = 0; i <= spec.n; ++i) inst.coords.push_back(draw_point(spec.kind, rng));
  inst.meta = InstanceMeta{to_string(spec.kind), spec.seed};
  inst.validate();
  return inst;
}

void write_instance(const Instance& inst, std::ostream& out) {
  if (inst.meta)
    out << "# meta generator=" << inst.meta->generator
        << " seed=" << inst.meta->seed << "\n";
  out << inst.n << " " << fmt_double(inst.alpha) << "\n";
  for (int i = 0; i <= inst.n; ++i)
    out << i << " " << fmt_double(inst.coords[i].x) << " "
        << fmt_double(inst.coords[i].y) << "\n";
}

namespace {

bool parse_double(const std::string& tok, double& out) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && p == e;
}

bool parse_u64(const std::string& tok, std::uint64_t& out) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && p == e;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Instance read_instance(std::istream& in) {
  Instance inst;
  std::optional<InstanceMeta> meta;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int rows_seen = 0;
  std::vector<char> id_seen;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      // Comments are ignored except the structured meta line.
      if (toks.size() == 4 && toks[1] == "meta" &&
          toks[2].rfind("generator=", 0) == 0 && toks[3].rfind("seed=", 0) == 0) {
        InstanceMeta m;
        m.generator = toks[2].substr(10);
        if (!parse_u64(toks[3].substr(5), m.seed))
          throw ParseError(lineno, "non-numeric seed in meta line");
        meta = m;
      }
      continue;
    }
    if (!have_header) {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'n alpha'");
      double n_val;
      if (!parse_double(toks[0], n_val) || n_val != std::floor(n_val))
        throw ParseError(lineno, "non-numeric field in 'n alpha'");
      inst.n = int(n_val);
      if (inst.n < 1) throw ParseError(lineno, "n must be >= 1");
      if (!parse_double(toks[1], inst.alpha))
        throw ParseError(lineno, "non-numeric field in 'n alpha'");
      if (!(inst.alpha > 0.0)) throw ParseError(lineno, "alpha must be > 0");
      inst.coords.assign(inst.n + 1, Point{});
      id_seen.assign(inst.n + 1, 0);
      have_header = true;
      continue;
    }
    if (rows_seen == inst.n + 1)
      throw ParseError(lineno, "count mismatch: expected " +
                                   std::to_string(inst.n + 1) +
                                   " coordinate lines");
    if (toks.size() != 3) throw ParseError(lineno, "expected 'id x y'");
    double id_val;
    Point p;
    if (!parse_double(toks[0], id_val) || id_val != std::floor(id_val))
      throw ParseError(lineno, "non-numeric node id");
    if (!parse_double(toks[1], p.x) || !parse_double(toks[2], p.y))
      throw ParseError(lineno, "non-numeric coordinate");
    const int id = int(id_val);
    if (id < 0 || id > inst.n)
      throw ParseError(lineno, "node id " + std::to_string(id) + " out of range");
    if (id_seen[id])
      throw ParseError(lineno, "duplicate id " + std::to_string(id));
    id_seen[id] = 1;
    inst.coords[id] = p;
    ++rows_seen;
  }

  if (!have_header) throw ParseError(lineno, "empty instance file");
  if (rows_seen != inst.n + 1)
    throw ParseError(lineno, "count mismatch: expected " +
                                 std::to_string(inst.n + 1) +
                                 " coordinate lines, got " +
                                 std::to_string(rows_seen));
  if (!id_seen[0]) throw ParseError(lineno, "missing depot (id 0)");
  inst.meta = meta;
  inst.validate();
  return inst;
}

void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_instance(inst, out);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_instance(in);
}

}  // namespace hfstsp
