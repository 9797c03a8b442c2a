#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "viaccel/params.hpp"
#include "viaccel/vector.hpp"

namespace viaccel {

enum class Termination { Tolerance, MaxIter, Divergence };

std::string_view to_string(Termination t) noexcept;

struct TraceRecord {
  std::size_t k = 0;
  double merit_primary = 0.0;
  double merit_aux = 0.0;
  std::optional<double> dist_sq;
  std::optional<double> potential;
  std::int64_t elapsed_ns = 0;
};

// Which Lyapunov quantity the `potential` column holds.
enum class PotentialKind {
  // ||z^k - z*||^2 + theta ||z^{k-1} - z*||^2
  TwoTerm,
  // The OGDA proof potential with alpha = 1/(2L), tau = alpha/(1+sigma).
  Ogda,
  // f(x^k) - f* + C ||v^k - x*||^2
  Energy,
};

std::string_view to_string(PotentialKind k) noexcept;

struct IterateTrace {
  std::string method;
  std::variant<ViParams, OptParams> params;
  std::vector<TraceRecord> records;
  Termination terminated_by = Termination::MaxIter;
  // Index of the last iterate computed (records may be thinned).
  std::size_t last_k = 0;
  PotentialKind potential_kind = PotentialKind::TwoTerm;
  double potential_theta = 0.0;
  double mu = 0.0;
  double lip = 0.0;
  std::optional<double> solution_norm;
  // Iterates aligned with records when RunOptions::keep_iterates is set.
  std::vector<Vector> iterates;
  // Free-form provenance: merit names, reference-run details and similar.
  std::map<std::string, std::string> metadata;

  double sigma() const { return mu / lip; }
};

// CSV with header k,merit_primary,merit_aux,dist_sq,potential,elapsed_ns;
// absent optionals are empty fields. Numbers use 17 significant digits.
void write_csv(std::ostream& out, const IterateTrace& trace);
// One JSON object per record with the same keys; absent optionals are null.
void write_jsonl(std::ostream& out, const IterateTrace& trace);

}  // namespace viaccel
