#include "fuglede/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fuglede/constructions.hpp"
#include "fuglede/oracle.hpp"
#include "fuglede/set_io.hpp"
#include "fuglede/structure.hpp"
#include "small_group.hpp"

namespace fuglede {
namespace {

using detail::Mask;
using detail::SmallGroup;

struct ListedSets {
  std::uint64_t count = 0;
  std::vector<Mask> sets;

  void add(Mask set, std::size_t cap) {
    ++count;
    if (sets.size() < cap) sets.push_back(set);
  }
};

struct ListedFailure {
  Mask set;
  std::string construction;
  std::string message;
};

struct ShardResult {
  std::uint64_t subsets = 0;
  std::uint64_t tiles = 0;
  std::uint64_t spectral = 0;
  std::vector<SizeTally> by_size;
  ListedSets mismatches;
  ListedSets divisibility;
  ListedSets pigeonhole;
  ListedSets size_witness;
  std::uint64_t failure_count = 0;
  std::vector<ListedFailure> failures;
};

class ShardChecker {
 public:
  ShardChecker(const SmallGroup& kernel, const std::vector<bool>& allowed, const EnumerationOptions& options)
      : kernel_(kernel), allowed_(allowed), options_(options) {}

  ShardResult run(Mask begin, Mask end) const {
    ShardResult out;
    out.by_size.resize(kernel_.order() + 1);
    for (std::uint64_t k = 0; k <= kernel_.order(); ++k) out.by_size[k].size = k;
    for (Mask set = begin; set != end; ++set) {
      const unsigned k = static_cast<unsigned>(std::popcount(set));
      if (!allowed_[k]) continue;
      if (options_.canonical && !kernel_.is_canonical(set)) continue;
      check(set, k, out);
    }
    return out;
  }

 private:
  void fail(ShardResult& out, Mask set, std::string construction, std::string message) const {
    ++out.failure_count;
    if (out.failures.size() < options_.max_listed) {
      out.failures.push_back({set, std::move(construction), std::move(message)});
    }
  }

  void check(Mask set, unsigned k, ShardResult& out) const {
    const GroupParams& params = kernel_.params();
    const std::size_t cap = options_.max_listed;
    ++out.subsets;
    ++out.by_size[k].subsets;
    if (k == 0) return;

    const std::uint64_t slots = kernel_.zero_slots(set);
    const unsigned exponent = divisibility_exponent(params, [&](const ClassRep& rep) {
      return ((slots >> rep_slot(params, rep)) & 1u) != 0;
    });
    if (k % params.power(exponent) != 0) out.divisibility.add(set, cap);

    const std::optional<Mask> complement = kernel_.find_complement(set);
    const std::optional<Mask> spectrum = kernel_.find_spectrum(set);
    if (complement) {
      ++out.tiles;
      ++out.by_size[k].tiles;
    }
    if (spectrum) {
      ++out.spectral;
      ++out.by_size[k].spectral;
    }
    if (complement.has_value() != spectrum.has_value()) out.mismatches.add(set, cap);
    check_tile_construction(set, complement, out);
    if (!spectrum) return;

    if (k > params.modulus() && k != params.order()) out.pigeonhole.add(set, cap);
    if (std::holds_alternative<MixedSize>(classify_size(k, params))) out.size_witness.add(set, cap);

    const GroupSet a = kernel_.to_set(set);
    try {
      const Construction built = complement_from_spectrum(a, kernel_.to_set(*spectrum));
      const PairCheck pair = check_tiling_pair(a, built.partner);
      if (!pair.ok) {
        fail(out, set, "complement_from_spectrum", pair.reason);
      } else if (!zero_sets_cover(a, built.partner)) {
        fail(out, set, "complement_from_spectrum", "Z_A u Z_T misses a nonzero element");
      }
    } catch (const Error& e) {
      fail(out, set, "complement_from_spectrum", e.what());
    }
  }

  void check_tile_construction(Mask set, const std::optional<Mask>& complement, ShardResult& out) const {
    if (!complement) return;
    const GroupSet a = kernel_.to_set(set);
    try {
      const Construction built = spectrum_from_tile(a, kernel_.to_set(*complement));
      const PairCheck pair = check_spectral_pair(a, built.partner);
      if (!pair.ok) fail(out, set, "spectrum_from_tile", pair.reason);
    } catch (const Error& e) {
      fail(out, set, "spectrum_from_tile", e.what());
    }
  }

  const SmallGroup& kernel_;
  const std::vector<bool>& allowed_;
  const EnumerationOptions& options_;
};

void merge_list(std::uint64_t& count, std::vector<GroupSet>& target, const ListedSets& source,
                const SmallGroup& kernel, std::size_t cap) {
  count += source.count;
  for (Mask set : source.sets) {
    if (target.size() < cap) target.push_back(kernel.to_set(set));
  }
}

std::string format_sizes(const std::vector<std::uint64_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i == 0 ? "" : ",") + std::to_string(sizes[i]);
  return out;
}

void write_set_list(std::ostream& out, const std::string& label, std::uint64_t count,
                    const std::vector<GroupSet>& sets) {
  out << label << ": " << count << '\n';
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << "[" << label << " " << i + 1 << "]\n" << format_set(sets[i]);
  }
  if (sets.size() < count) out << "(" << count - sets.size() << " more not listed)\n";
}

}  // namespace

bool EnumerationReport::clean() const noexcept {
  return mismatch_count == 0 && construction_failure_count == 0 && divisibility_exception_count == 0 &&
         pigeonhole_exception_count == 0 && size_witness_exception_count == 0;
}

EnumerationReport enumerate_and_check(const GroupParams& params, const EnumerationOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::uint64_t limit = options.sizes ? kFilteredEnumerationOrderLimit : kEnumerationOrderLimit;
  if (params.order() > limit) {
    throw CapacityError("enumeration over a group of order " + std::to_string(params.order()) +
                        " exceeds the cap " + std::to_string(limit) +
                        (options.sizes ? "" : " (a size filter raises it to 32)"));
  }
  if (options.shards == 0 || options.shards > kMaxShards) {
    throw ParameterError("shard count must lie in [1, " + std::to_string(kMaxShards) + "]");
  }

  const SmallGroup kernel(params);
  const unsigned order = kernel.order();
  std::vector<bool> allowed(order + 1, !options.sizes);
  std::optional<std::vector<std::uint64_t>> filter;
  if (options.sizes) {
    filter = *options.sizes;
    std::sort(filter->begin(), filter->end());
    filter->erase(std::unique(filter->begin(), filter->end()), filter->end());
    for (std::uint64_t k : *filter) {
      if (k > order) throw ParameterError("size " + std::to_string(k) + " exceeds |G| = " + std::to_string(order));
      allowed[k] = true;
    }
  }

  const Mask total = Mask{1} << order;
  const std::uint64_t shards = options.shards;
  std::vector<ShardResult> results(shards);
  const ShardChecker checker(kernel, allowed, options);
  auto bound = [&](std::uint64_t s) {
    return total * s / shards;
  };

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shards));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t s = next++; s < shards; s = next++) results[s] = checker.run(bound(s), bound(s + 1));
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  EnumerationReport report{.params = params, .size_filter = filter, .canonical = options.canonical};
  std::vector<SizeTally> by_size(order + 1);
  for (unsigned k = 0; k <= order; ++k) by_size[k].size = k;
  const std::size_t cap = options.max_listed;
  for (const ShardResult& r : results) {
    report.subsets_examined += r.subsets;
    report.tiles += r.tiles;
    report.spectral += r.spectral;
    for (unsigned k = 0; k <= order; ++k) {
      by_size[k].subsets += r.by_size[k].subsets;
      by_size[k].tiles += r.by_size[k].tiles;
      by_size[k].spectral += r.by_size[k].spectral;
    }
    merge_list(report.mismatch_count, report.mismatches, r.mismatches, kernel, cap);
    merge_list(report.divisibility_exception_count, report.divisibility_exceptions, r.divisibility, kernel, cap);
    merge_list(report.pigeonhole_exception_count, report.pigeonhole_exceptions, r.pigeonhole, kernel, cap);
    merge_list(report.size_witness_exception_count, report.size_witness_exceptions, r.size_witness, kernel, cap);
    report.construction_failure_count += r.failure_count;
    for (const ListedFailure& f : r.failures) {
      if (report.construction_failures.size() < cap) {
        report.construction_failures.push_back({kernel.to_set(f.set), f.construction, f.message});
      }
    }
  }
  for (const SizeTally& tally : by_size) {
    if (tally.subsets != 0) report.by_size.push_back(tally);
  }
  if (options.canonical) report.orbits_examined = report.subsets_examined;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string format_report(const EnumerationReport& report, bool timing) {
  std::ostringstream out;
  out << "params: p=" << report.params.p() << " n=" << report.params.n() << " order=" << report.params.order()
      << '\n';
  out << "size_filter: " << (report.size_filter ? format_sizes(*report.size_filter) : "all") << '\n';
  out << "canonical: " << (report.canonical ? "true" : "false") << '\n';
  out << "subsets_examined: " << report.subsets_examined << '\n';
  if (report.orbits_examined) out << "orbits_examined: " << *report.orbits_examined << '\n';
  out << "tiles: " << report.tiles << '\n';
  out << "spectral: " << report.spectral << '\n';
  out << "by_size: size subsets tiles spectral\n";
  for (const SizeTally& t : report.by_size) {
    out << "  " << t.size << ' ' << t.subsets << ' ' << t.tiles << ' ' << t.spectral << '\n';
  }
  write_set_list(out, "mismatches", report.mismatch_count, report.mismatches);
  out << "construction_failures: " << report.construction_failure_count << '\n';
  for (std::size_t i = 0; i < report.construction_failures.size(); ++i) {
    const ConstructionFailure& f = report.construction_failures[i];
    out << "[construction_failures " << i + 1 << "] " << f.construction << ": " << f.message << '\n'
        << format_set(f.set);
  }
  if (report.construction_failures.size() < report.construction_failure_count) {
    out << "(" << report.construction_failure_count - report.construction_failures.size() << " more not listed)\n";
  }
  write_set_list(out, "divisibility_exceptions", report.divisibility_exception_count,
                 report.divisibility_exceptions);
  write_set_list(out, "pigeonhole_exceptions", report.pigeonhole_exception_count, report.pigeonhole_exceptions);
  write_set_list(out, "size_witness_exceptions", report.size_witness_exception_count,
                 report.size_witness_exceptions);
  if (timing) out << "wall_time: " << report.wall_time_seconds << "s\n";
  return out.str();
}

std::string format_report_json(const EnumerationReport& report, bool timing) {
  using Json = nlohmann::ordered_json;
  auto sets = [](const std::vector<GroupSet>& list) {
    Json out = Json::array();
    for (const GroupSet& s : list) out.push_back(format_set(s));
    return out;
  };
  Json j;
  j["params"] = {{"p", report.params.p()}, {"n", report.params.n()}, {"order", report.params.order()}};
  j["size_filter"] = report.size_filter ? Json(*report.size_filter) : Json(nullptr);
  j["canonical"] = report.canonical;
  j["subsets_examined"] = report.subsets_examined;
  j["orbits_examined"] = report.orbits_examined ? Json(*report.orbits_examined) : Json(nullptr);
  j["tiles"] = report.tiles;
  j["spectral"] = report.spectral;
  Json by_size = Json::array();
  for (const SizeTally& t : report.by_size) {
    by_size.push_back({{"size", t.size}, {"subsets", t.subsets}, {"tiles", t.tiles}, {"spectral", t.spectral}});
  }
  j["by_size"] = std::move(by_size);
  j["mismatch_count"] = report.mismatch_count;
  j["mismatches"] = sets(report.mismatches);
  j["construction_failure_count"] = report.construction_failure_count;
  Json failures = Json::array();
  for (const ConstructionFailure& f : report.construction_failures) {
    failures.push_back({{"construction", f.construction}, {"message", f.message}, {"set", format_set(f.set)}});
  }
  j["construction_failures"] = std::move(failures);
  j["divisibility_exception_count"] = report.divisibility_exception_count;
  j["divisibility_exceptions"] = sets(report.divisibility_exceptions);
  j["pigeonhole_exception_count"] = report.pigeonhole_exception_count;
  j["pigeonhole_exceptions"] = sets(report.pigeonhole_exceptions);
  j["size_witness_exception_count"] = report.size_witness_exception_count;
  j["size_witness_exceptions"] = sets(report.size_witness_exceptions);
  if (timing) j["wall_time"] = report.wall_time_seconds;
  return j.dump(2) + "\n";
}

}  // namespace fuglede
