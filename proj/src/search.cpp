#include "cayley/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <ostream>
#include <span>
#include <thread>

#include <json.hpp>

#include "cayley/embed.hpp"
#include "cayley/errors.hpp"
#include "cayley/modular.hpp"
#include "cayley/rings.hpp"
#include "cayley/table.hpp"

namespace cayley {

namespace {

void validate_spec(const SearchSpec& spec, ScanKind expected) {
  if (spec.kind != expected)
    throw InvalidSpecError(std::string("scan expects kind '") +
                           std::string(scan_kind_name(expected)) + "', got '" +
                           std::string(scan_kind_name(spec.kind)) + "'");
  if (spec.n_lo > spec.n_hi) throw InvalidSpecError("modulus range is empty");
  if (spec.n_lo < 1) throw InvalidSpecError("modulus must be >= 1");
  if (spec.min_group_order < 1) throw InvalidSpecError("min_group_order must be >= 1");
  if (spec.max_carrier < 1) throw InvalidSpecError("max_carrier must be >= 1");
}

// Runs per_n over the modulus range on a worker pool and concatenates the
// results in n order, so scheduling never shows in the output. The first
// failing n (by value, not by time) wins when several throw.
std::vector<Finding> scan_over_n(const SearchSpec& spec,
                                 const std::function<std::vector<Finding>(std::int64_t)>& per_n) {
  const std::size_t count = static_cast<std::size_t>(spec.n_hi - spec.n_lo + 1);
  std::vector<std::vector<Finding>> slots(count);
  std::vector<std::exception_ptr> errors(count);

  unsigned workers = spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min(workers, static_cast<unsigned>(count)));

  std::atomic<std::int64_t> next{spec.n_lo};
  auto work = [&] {
    for (std::int64_t n = next.fetch_add(1); n <= spec.n_hi; n = next.fetch_add(1)) {
      const std::size_t slot = static_cast<std::size_t>(n - spec.n_lo);
      try {
        slots[slot] = per_n(n);
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Finding> out;
  for (std::vector<Finding>& s : slots)
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  return out;
}

std::vector<std::int64_t> sorted_labels(std::span<const std::int64_t> labels) {
  std::vector<std::int64_t> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> divisors_between(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d < n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

std::string_view scan_kind_name(ScanKind k) {
  switch (k) {
    case ScanKind::SpecialSemigroup: return "special-semigroup";
    case ScanKind::SpecialRing: return "special-ring";
    case ScanKind::SpecialIdeal: return "special-ideal";
  }
  return "unknown";
}

std::vector<Finding> scan_special_semigroups(const SearchSpec& spec) {
  validate_spec(spec, ScanKind::SpecialSemigroup);
  return scan_over_n(spec, [&spec](std::int64_t n) {
    std::vector<Finding> out;
    std::int64_t lo = 0;
    std::int64_t hi = n - 1;
    if (spec.generator_range) {
      lo = std::max(lo, spec.generator_range->first);
      hi = std::min(hi, spec.generator_range->second);
    }
    for (std::int64_t a = lo; a <= hi; ++a) {
      const CayleyTable t = generated_mul_semigroup(a, n);
      if (t.size() > spec.max_carrier)
        throw TooLargeError("carrier of size " + std::to_string(t.size()) +
                            " exceeds the scan limit " + std::to_string(spec.max_carrier));
      const SpecialVerdict<GroupWitness> v = is_special_semigroup(t, spec.min_group_order);
      if (!v.special) continue;
      Finding f;
      f.kind = std::string(scan_kind_name(ScanKind::SpecialSemigroup));
      f.n = n;
      f.a = a;
      f.carrier = sorted_labels(t.labels());
      f.witness = v.witnesses.front().carrier;
      f.witness_identity = v.witnesses.front().identity;
      f.classification = std::string(kind_name(classify(t).kind));
      out.push_back(std::move(f));
    }
    return out;
  });
}

std::vector<Finding> scan_special_rings(const SearchSpec& spec) {
  validate_spec(spec, ScanKind::SpecialRing);
  return scan_over_n(spec, [&spec](std::int64_t n) {
    std::vector<Finding> out;
    std::vector<std::int64_t> ds{1};
    const std::vector<std::int64_t> proper = divisors_between(n);
    ds.insert(ds.end(), proper.begin(), proper.end());
    for (std::int64_t d : ds) {
      if (n / d > spec.max_carrier)
        throw TooLargeError("carrier of size " + std::to_string(n / d) +
                            " exceeds the scan limit " + std::to_string(spec.max_carrier));
      const RingTable rt = zn_ring(n, d);
      const SpecialVerdict<FieldWitness> v = is_special_ring(rt);
      if (!v.special) continue;
      Finding f;
      f.kind = std::string(scan_kind_name(ScanKind::SpecialRing));
      f.n = n;
      f.d = d;
      f.carrier = sorted_labels(rt.labels());
      f.witness = v.witnesses.front().carrier;
      f.witness_identity = v.witnesses.front().unity;
      f.classification = std::string(ring_kind_name(classify_ring(rt).kind));
      out.push_back(std::move(f));
    }
    return out;
  });
}

std::vector<Finding> scan_special_ideals(const SearchSpec& spec) {
  validate_spec(spec, ScanKind::SpecialIdeal);
  return scan_over_n(spec, [&spec](std::int64_t n) {
    std::vector<Finding> out;
    if (n > spec.max_carrier)
      throw TooLargeError("carrier of size " + std::to_string(n) + " exceeds the scan limit " +
                          std::to_string(spec.max_carrier));
    const std::vector<std::int64_t> ds = divisors_between(n);
    if (ds.empty()) return out;
    const RingTable ambient = zn_ring(n);
    for (std::int64_t d : ds) {
      std::vector<std::int64_t> subset;
      for (std::int64_t x = 0; x < n; x += d) subset.push_back(x);
      const SpecialVerdict<FieldWitness> v = is_special_ideal(ambient, subset);
      if (!v.special) continue;
      Finding f;
      f.kind = std::string(scan_kind_name(ScanKind::SpecialIdeal));
      f.n = n;
      f.d = d;
      f.carrier = subset;
      f.witness = v.witnesses.front().carrier;
      f.witness_identity = v.witnesses.front().unity;
      f.classification = std::string(ring_kind_name(classify_ring(zn_ring(n, d)).kind));
      out.push_back(std::move(f));
    }
    return out;
  });
}

std::string finding_to_json(const Finding& f) {
  nlohmann::ordered_json j;
  j["kind"] = f.kind;
  j["n"] = f.n;
  if (f.a) j["a"] = *f.a;
  if (f.d) j["d"] = *f.d;
  j["carrier"] = f.carrier;
  j["witness"] = f.witness;
  j["witness_identity"] = f.witness_identity;
  j["classification"] = f.classification;
  return j.dump();
}

std::size_t emit_findings(const std::vector<Finding>& findings, std::ostream& out) {
  for (const Finding& f : findings) {
    out << finding_to_json(f) << '\n';
    if (out.fail()) throw SinkFailureError("failed writing findings");
  }
  out.flush();
  if (out.fail()) throw SinkFailureError("failed writing findings");
  return findings.size();
}

}  // namespace cayley
