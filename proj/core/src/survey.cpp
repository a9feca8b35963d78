#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fiedler/admissibility.hpp"
#include "fiedler/enumeration.hpp"
#include "fiedler/errors.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

namespace {

constexpr std::size_t kBatch = 4096;

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out.push_back(';');
    out += std::to_string(vs[i]);
  }
  return out;
}

nlohmann::json aggregate_state(const SurveyAggregate& a) {
  return {{"total", a.total},
          {"degenerate", a.degenerate},
          {"strict_failures", a.strict_failures},
          {"relaxed_failures", a.relaxed_failures},
          {"degenerate_strict_failures", a.degenerate_strict_failures},
          {"degenerate_relaxed_failures", a.degenerate_relaxed_failures},
          {"counted", a.counted}};
}

void restore_state(SurveyAggregate& a, const nlohmann::json& j) {
  a.total = j.at("total").get<std::uint64_t>();
  a.degenerate = j.at("degenerate").get<std::uint64_t>();
  a.strict_failures = j.at("strict_failures").get<std::uint64_t>();
  a.relaxed_failures = j.at("relaxed_failures").get<std::uint64_t>();
  a.degenerate_strict_failures = j.at("degenerate_strict_failures").get<std::uint64_t>();
  a.degenerate_relaxed_failures = j.at("degenerate_relaxed_failures").get<std::uint64_t>();
  a.counted = j.at("counted").get<std::uint64_t>();
}

void write_checkpoint(const std::filesystem::path& path, int n, std::uint64_t csv_offset,
                      const SurveyAggregate& a) {
  const nlohmann::json j{{"n", n},
                         {"include_degenerate", a.include_degenerate},
                         {"csv_offset", csv_offset},
                         {"state", aggregate_state(a)}};
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump() << '\n';
    if (!out) throw Error("cannot write checkpoint " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot write checkpoint " + path.string() + ": " + ec.message());
}

}  // namespace

SurveyRecord analyse_tree(std::span<const int> levels) {
  const Graph tree = tree_from_level_sequence(levels);
  SurveyRecord r;
  r.n = tree.vertex_count();
  r.code = level_code(levels);
  if (r.n < 2) {
    r.strict = r.relaxed = true;
    return r;
  }
  const EigenPair pair = fiedler_pair(tree, {.path = SolverPath::dense});
  const ExtremaVerdict verdict = extrema_verdict(tree, pair);
  r.lambda2 = pair.lambda;
  r.degenerate = pair.degenerate;
  r.strict = verdict.strict;
  r.relaxed = verdict.relaxed;
  r.diametral_pairs = static_cast<int>(verdict.diametral_pairs.size());
  r.argmax = verdict.argmax;
  r.argmin = verdict.argmin;
  return r;
}

void SurveyAggregate::add(const SurveyRecord& record) {
  ++total;
  if (record.degenerate) {
    ++degenerate;
    degenerate_strict_failures += !record.strict;
    degenerate_relaxed_failures += !record.relaxed;
    if (!include_degenerate) return;
  }
  ++counted;
  strict_failures += !record.strict;
  relaxed_failures += !record.relaxed;
}

void SurveyAggregate::finish() {
  strict_failure_fraction = counted ? static_cast<double>(strict_failures) / static_cast<double>(counted) : 0.0;
  relaxed_failure_fraction = counted ? static_cast<double>(relaxed_failures) / static_cast<double>(counted) : 0.0;
  const auto known = known_free_tree_count(n);
  census_ok = known && *known == total;
}

std::string survey_csv_header() { return "n,code,lambda2,degenerate,strict,relaxed,argmax,argmin\n"; }

std::string survey_csv_row(const SurveyRecord& r) {
  std::string row = std::to_string(r.n);
  row += ',' + r.code + ',' + format_double(r.lambda2);
  row += r.degenerate ? ",1" : ",0";
  row += r.strict ? ",1" : ",0";
  row += r.relaxed ? ",1" : ",0";
  row += ',' + join(r.argmax) + ',' + join(r.argmin) + '\n';
  return row;
}

SurveyAggregate run_survey(const SurveyOptions& options) {
  FreeTreeEnumerator enumerator(options.n);
  SurveyAggregate agg;
  agg.n = options.n;
  agg.include_degenerate = options.include_degenerate;

  std::uint64_t csv_offset = 0;
  std::uint64_t skip = 0;
  if (options.resume && options.checkpoint_path && std::filesystem::exists(*options.checkpoint_path)) {
    std::ifstream in(*options.checkpoint_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error("unreadable checkpoint " + options.checkpoint_path->string() + ": " + e.what());
    }
    if (j.at("n").get<int>() != options.n || j.at("include_degenerate").get<bool>() != options.include_degenerate) {
      throw Error("checkpoint " + options.checkpoint_path->string() + " belongs to a different survey");
    }
    restore_state(agg, j.at("state"));
    csv_offset = j.at("csv_offset").get<std::uint64_t>();
    skip = agg.total;
  }

  std::ofstream csv;
  if (options.csv_path) {
    if (skip > 0) {
      std::error_code ec;
      std::filesystem::resize_file(*options.csv_path, csv_offset, ec);
      if (ec) throw Error("cannot truncate " + options.csv_path->string() + " for resume: " + ec.message());
      csv.open(*options.csv_path, std::ios::binary | std::ios::app);
    } else {
      csv.open(*options.csv_path, std::ios::binary | std::ios::trunc);
      csv << survey_csv_header();
      csv_offset = survey_csv_header().size();
    }
    if (!csv) throw Error("cannot open " + options.csv_path->string());
  }

  for (std::uint64_t i = 0; i < skip; ++i) {
    if (!enumerator.next()) throw Error("checkpoint is past the end of the enumeration");
  }

  const int workers = std::max(1, options.parallelism);
  std::vector<std::vector<int>> batch;
  std::vector<SurveyRecord> records;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < kBatch && (more = enumerator.next())) batch.push_back(enumerator.level_sequence());
    if (batch.empty()) break;

    records.assign(batch.size(), {});
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < batch.size();) records[i] = analyse_tree(batch[i]);
    };
    if (workers == 1 || batch.size() < 64) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (const auto& record : records) {
      agg.add(record);
      if (csv.is_open()) {
        const auto row = survey_csv_row(record);
        csv << row;
        csv_offset += row.size();
      }
      if (options.on_record) options.on_record(record);
      if (options.checkpoint_path && options.checkpoint_interval > 0 &&
          agg.total % options.checkpoint_interval == 0) {
        if (csv.is_open()) {
          csv.flush();
          if (!csv) throw Error("write to " + options.csv_path->string() + " failed");
        }
        write_checkpoint(*options.checkpoint_path, options.n, csv_offset, agg);
      }
    }
    if (csv.is_open() && !csv) {
      throw Error("write to " + options.csv_path->string() + " failed; resume from the last checkpoint");
    }
  }
  if (csv.is_open()) {
    csv.flush();
    if (!csv) throw Error("write to " + options.csv_path->string() + " failed");
  }
  agg.finish();
  return agg;
}

}  // namespace fiedler
