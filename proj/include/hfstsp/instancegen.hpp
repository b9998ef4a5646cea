#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include "hfstsp/model.hpp"

namespace hfstsp {

enum class GenKind { uniform, one_center, two_center };

std::string to_string(GenKind k);
GenKind gen_kind_from_string(const std::string& s);  // throws on unknown names

struct GenSpec {
  GenKind kind = GenKind::uniform;
  int n = 1;
  double alpha = 2.0;
  std::uint64_t seed = 0;
};

/// Deterministic random stream used by the generators. The engine is
/// std::mt19937_64 (bit-exact across platforms per the standard); integers
/// are drawn by rejection sampling, reals by 53-bit mantissa scaling, and
/// normals by Box-Muller (cosine branch, one normal per call), so a given
/// seed yields the same instance everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double normal(double mean, double stddev);

  bool coin() { return (next_u64() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Draws depot and customers from the spec's point process; the depot is the
/// first point drawn. Per-point stream order: uniform consumes x then y;
/// one_center consumes angle then the two Box-Muller uniforms for the
/// radius; two_center additionally consumes the shift coin last.
Instance generate(const GenSpec& spec);

/// Text format: optional `#` comment lines, a `# meta generator=... seed=...`
/// line when metadata is present, one `n alpha` line, then n+1 `id x y`
/// lines with id 0 the depot. Doubles are written with 17 significant
/// digits so read(write(x)) == x exactly.
void write_instance(const Instance& inst, std::ostream& out);
Instance read_instance(std::istream& in);

void write_instance_file(const Instance& inst, const std::string& path);
Instance read_instance_file(const std::string& path);

}  // namespace hfstsp
