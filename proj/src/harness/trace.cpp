#include "viaccel/trace.hpp"

#include <ostream>

#include "viaccel/problem_io.hpp"

namespace viaccel {
namespace {

std::string optional_field(const std::optional<double>& v, std::string_view absent) {
  return v ? format_double(*v) : std::string(absent);
}

}  // namespace

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::Tolerance:
      return "tolerance";
    case Termination::MaxIter:
      return "max-iter";
    case Termination::Divergence:
      return "divergence";
  }
  return "unknown";
}

std::string_view to_string(PotentialKind k) noexcept {
  switch (k) {
    case PotentialKind::TwoTerm:
      return "two-term";
    case PotentialKind::Ogda:
      return "ogda";
    case PotentialKind::Energy:
      return "energy";
  }
  return "unknown";
}

void write_csv(std::ostream& out, const IterateTrace& trace) {
  out << "k,merit_primary,merit_aux,dist_sq,potential,elapsed_ns\n";
  for (const auto& r : trace.records) {
    out << r.k << ',' << format_double(r.merit_primary) << ',' << format_double(r.merit_aux) << ','
        << optional_field(r.dist_sq, "") << ',' << optional_field(r.potential, "") << ','
        << r.elapsed_ns << '\n';
  }
}

void write_jsonl(std::ostream& out, const IterateTrace& trace) {
  for (const auto& r : trace.records) {
    out << "{\"k\":" << r.k << ",\"merit_primary\":" << format_double(r.merit_primary)
        << ",\"merit_aux\":" << format_double(r.merit_aux)
        << ",\"dist_sq\":" << optional_field(r.dist_sq, "null")
        << ",\"potential\":" << optional_field(r.potential, "null")
        << ",\"elapsed_ns\":" << r.elapsed_ns << "}\n";
  }
}

}  // namespace viaccel
