#include "fiedler/json_io.hpp"

#include <charconv>
#include <cmath>

namespace fiedler {

namespace {

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

const char* status_name(MonotonicityVerdict::Status s) {
  switch (s) {
    case MonotonicityVerdict::Status::pass: return "pass";
    case MonotonicityVerdict::Status::fail: return "fail";
    case MonotonicityVerdict::Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

void write_double(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  std::string_view text(buf, ptr);
  out += text;
  // keep it a float on re-read
  if (text.find_first_of(".eE") == std::string_view::npos) out += ".0";
}

void newline(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out.push_back('\n');
  out.append(static_cast<std::size_t>(indent * depth), ' ');
}

void write(std::string& out, const Json& v, int indent, int depth) {
  switch (v.type()) {
    case Json::value_t::number_float:
      write_double(out, v.get<double>());
      return;
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out.push_back('[');
      bool first = true;
      for (const auto& item : v) {
        if (!first) out.push_back(',');
        first = false;
        newline(out, indent, depth + 1);
        write(out, item, indent, depth + 1);
      }
      newline(out, indent, depth);
      out.push_back(']');
      return;
    }
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        newline(out, indent, depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, depth + 1);
      }
      newline(out, indent, depth);
      out.push_back('}');
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

Json to_json(const EigenPair& p) {
  return {{"n", p.phi.size()},
          {"k", p.k},
          {"lambda", p.lambda},
          {"residual", p.residual},
          {"gap_to_next", optional_number(p.gap_to_next)},
          {"gap_to_previous", optional_number(p.gap_to_previous)},
          {"degenerate", p.degenerate},
          {"phi", p.phi}};
}

Json to_json(const BoundsReport& b) {
  return {{"n", b.n},
          {"diameter", b.diameter},
          {"lambda2", b.lambda2},
          {"linf", b.linf},
          {"positive_mass", b.positive_mass},
          {"mckay_lower", b.mckay_lower},
          {"path_upper_exact", b.path_upper_exact},
          {"ten_over_d2", b.ten_over_d2},
          {"linf_bound", b.linf_bound},
          {"positive_mass_lower", b.positive_mass_lower},
          {"mckay_holds", b.mckay_holds},
          {"path_upper_holds", b.path_upper_holds},
          {"ten_over_d2_holds", b.ten_over_d2_holds},
          {"linf_holds", b.linf_holds},
          {"positive_mass_holds", b.positive_mass_holds},
          {"all_hold", b.all_hold()}};
}

Json to_json(const MonotonicityVerdict& m) {
  Json j{{"status", status_name(m.status)}};
  j["witness"] = m.witness ? Json{m.witness->first, m.witness->second} : Json(nullptr);
  j["reason"] = m.reason;
  return j;
}

Json to_json(const ExtremaVerdict& e) {
  return {{"argmax", e.argmax},
          {"argmin", e.argmin},
          {"diameter", e.diameter},
          {"diametral_pairs", edge_list(e.diametral_pairs)},
          {"strict", e.strict},
          {"relaxed", e.relaxed},
          {"degenerate", e.degenerate}};
}

Json to_json(const AdmissibilityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"anchor_position", row.anchor_position},
                    {"size", row.size},
                    {"size_bound", row.size_bound},
                    {"hit", optional_number(row.hit)},
                    {"hit_bound", row.hit_bound},
                    {"isolated", row.isolated},
                    {"size_ok", row.size_ok},
                    {"hit_ok", row.hit_ok}});
  }
  return {{"diameter", r.diameter},
          {"path", r.path},
          {"attachments", std::move(rows)},
          {"admissible", r.admissible},
          {"lambda2", r.lambda2},
          {"hit_max", r.hit_max},
          {"lambda_hit_margin", r.lambda_hit_margin},
          {"path_hit", r.path_hit},
          {"path_margin", r.path_margin}};
}

Json to_json(const PayoffEstimate& e) {
  return {{"exact", e.exact},
          {"mc_mean", e.mc_mean},
          {"mc_stderr", e.mc_stderr},
          {"samples", e.samples},
          {"seed", e.seed},
          {"max_steps_hit", e.max_steps_hit},
          {"truncated_samples", e.truncated_samples},
          {"total_steps", e.total_steps}};
}

Json to_json(const HittingProfile& h) {
  return {{"targets", h.targets},
          {"hit_max", h.hit_max},
          {"argmax", h.argmax},
          {"residual", h.residual},
          {"h", h.h}};
}

Json to_json(const SurveyRecord& r) {
  return {{"n", r.n},
          {"code", r.code},
          {"lambda2", r.lambda2},
          {"degenerate", r.degenerate},
          {"strict", r.strict},
          {"relaxed", r.relaxed},
          {"diametral_pairs", r.diametral_pairs},
          {"argmax", r.argmax},
          {"argmin", r.argmin}};
}

Json to_json(const SurveyAggregate& a) {
  return {{"n", a.n},
          {"total", a.total},
          {"degenerate", a.degenerate},
          {"include_degenerate", a.include_degenerate},
          {"counted", a.counted},
          {"strict_failures", a.strict_failures},
          {"relaxed_failures", a.relaxed_failures},
          {"strict_failure_fraction", a.strict_failure_fraction},
          {"relaxed_failure_fraction", a.relaxed_failure_fraction},
          {"degenerate_strict_failures", a.degenerate_strict_failures},
          {"degenerate_relaxed_failures", a.degenerate_relaxed_failures},
          {"census_ok", a.census_ok}};
}

std::string dump_json(const Json& value, int indent) {
  std::string out;
  write(out, value, indent, 0);
  return out;
}

}  // namespace fiedler
