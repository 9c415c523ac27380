#include "cayley/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/embed.hpp"
#include "cayley/errors.hpp"
#include "cayley/io.hpp"
#include "cayley/modular.hpp"
#include "cayley/rings.hpp"
#include "cayley/search.hpp"
#include "cayley/table.hpp"

#ifndef CAYLEY_FIXTURES_DIR
#define CAYLEY_FIXTURES_DIR "fixtures/verify-paper"
#endif

namespace cayley::cli {

namespace {

using nlohmann::ordered_json;

std::string join_labels(std::span<const std::int64_t> labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels[i]);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto bad = [&] {
    return InvalidSpecError("range '" + text + "' is not of the form <lo>..<hi>");
  };
  const std::size_t dots = text.find("..");
  std::string lo_text = dots == std::string::npos ? text : text.substr(0, dots);
  std::string hi_text = dots == std::string::npos ? text : text.substr(dots + 2);
  try {
    std::size_t used = 0;
    const std::int64_t lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw bad();
    used = 0;
    const std::int64_t hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw bad();
    return {lo, hi};
  } catch (const InvalidSpecError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string classification_line(const StructureClass& cls) {
  std::string out{kind_name(cls.kind)};
  if (cls.identity) out += "; identity " + std::to_string(*cls.identity);
  return out;
}

std::string ring_classification_line(const RingTable& rt, const RingClass& rc) {
  std::string out{ring_kind_name(rc.kind)};
  out += "; zero " + std::to_string(rt.zero());
  if (rc.unity) out += "; unity " + std::to_string(*rc.unity);
  return out;
}

ordered_json group_witnesses_json(const std::vector<GroupWitness>& ws) {
  ordered_json arr = ordered_json::array();
  for (const GroupWitness& w : ws) arr.push_back({{"carrier", w.carrier}, {"identity", w.identity}});
  return arr;
}

ordered_json field_witnesses_json(const std::vector<FieldWitness>& ws) {
  ordered_json arr = ordered_json::array();
  for (const FieldWitness& w : ws)
    arr.push_back({{"carrier", w.carrier}, {"zero", w.zero}, {"unity", w.unity}});
  return arr;
}

int report_table(const CayleyTable& t, int min_order, const std::string& format,
                 std::ostream& out) {
  const StructureClass cls = classify(t);
  std::optional<SpecialVerdict<GroupWitness>> verdict;
  if (is_associative(t)) verdict = is_special_semigroup(t, min_order);

  if (format == "json") {
    ordered_json j;
    j["carrier"] = std::vector<std::int64_t>(t.labels().begin(), t.labels().end());
    j["kind"] = std::string(kind_name(cls.kind));
    j["commutative"] = cls.commutative;
    j["identity"] = cls.identity ? ordered_json(*cls.identity) : ordered_json(nullptr);
    j["idempotents"] = cls.idempotents;
    if (verdict) {
      j["special_semigroup"] = {{"special", verdict->special},
                                {"reason", std::string(reason_name(verdict->reason))},
                                {"witnesses", group_witnesses_json(verdict->witnesses)}};
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  out << render_table(t);
  out << classification_line(cls) << '\n';
  out << "idempotents: " << join_labels(cls.idempotents) << '\n';
  if (verdict) {
    if (verdict->special) {
      const GroupWitness& w = verdict->witnesses.front();
      out << "special semigroup: yes; witness " << join_labels(w.carrier) << "; witness identity "
          << w.identity << '\n';
    } else {
      out << "special semigroup: no (" << reason_name(verdict->reason) << ")\n";
    }
  }
  return 0;
}

int report_ring(const RingTable& rt, const std::string& format, std::ostream& out) {
  const RingClass rc = classify_ring(rt);
  const SpecialVerdict<FieldWitness> verdict = is_special_ring(rt);

  if (format == "json") {
    ordered_json j;
    j["carrier"] = std::vector<std::int64_t>(rt.labels().begin(), rt.labels().end());
    j["kind"] = std::string(ring_kind_name(rc.kind));
    j["zero"] = rt.zero();
    j["unity"] = rc.unity ? ordered_json(*rc.unity) : ordered_json(nullptr);
    j["special_ring"] = {{"special", verdict.special},
                         {"reason", std::string(reason_name(verdict.reason))},
                         {"witnesses", field_witnesses_json(verdict.witnesses)}};
    out << j.dump(2) << '\n';
    return 0;
  }

  out << render_table(rt.add_table(), "+");
  out << render_table(rt.mul_table(), "x");
  out << ring_classification_line(rt, rc) << '\n';
  if (verdict.special) {
    const FieldWitness& w = verdict.witnesses.front();
    out << "special ring: yes; witness " << join_labels(w.carrier) << "; witness unity " << w.unity
        << '\n';
  } else {
    out << "special ring: no (" << reason_name(verdict.reason) << ")\n";
  }
  return 0;
}

int report_orbit(const OrbitSummary& orbit, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json j;
    j["base"] = orbit.base;
    j["modulus"] = orbit.modulus;
    j["residues"] = orbit.residues;
    j["tail"] = orbit.tail;
    j["period"] = orbit.period;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "residues: " << join_labels(orbit.residues) << '\n';
  out << "tail: " << orbit.tail << '\n';
  out << "period: " << orbit.period << '\n';
  return 0;
}

int report_findings(const std::vector<Finding>& findings, const std::string& out_path,
                    const std::string& format, std::ostream& out) {
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw SinkFailureError("cannot open '" + out_path + "' for writing");
    const std::size_t count = emit_findings(findings, file);
    if (format == "json") {
      out << ordered_json{{"count", count}, {"out", out_path}}.dump(2) << '\n';
    } else {
      out << count << " findings written to " << out_path << '\n';
    }
    return 0;
  }
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const Finding& f : findings) arr.push_back(ordered_json::parse(finding_to_json(f)));
    out << arr.dump(2) << '\n';
    return 0;
  }
  emit_findings(findings, out);
  return 0;
}

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::string read_fixture(const std::string& dir, const std::string& file) {
  const std::string path = dir + "/" + file;
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<unreadable: " + path + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string orbit_text(const OrbitSummary& orbit) {
  std::string out = "residues: " + join_labels(orbit.residues) + "\n";
  out += "tail: " + std::to_string(orbit.tail) + "\n";
  out += "period: " + std::to_string(orbit.period) + "\n";
  return out;
}

int run_verify_paper(const std::string& fixtures, const std::string& format, std::ostream& out) {
  std::vector<Check> checks;
  const CayleyTable ss = generated_mul_semigroup(18, 60);

  {
    const std::vector<std::int64_t> sg_labels{24, 12, 36, 48};
    const CayleyTable sg = restrict_to(ss, sg_labels);
    checks.push_back({"sg-table", read_fixture(fixtures, "sg_table.txt"), render_table(sg), false});
  }
  checks.push_back({"ss-table", read_fixture(fixtures, "ss_table.txt"), render_table(ss), false});
  checks.push_back({"orbit-18-60", read_fixture(fixtures, "orbit_18_60.txt"),
                    orbit_text(power_orbit(18, 60)), false});
  {
    const RingTable z60 = zn_ring(60);
    const std::vector<std::int64_t> m_labels{0, 12, 24, 36, 48};
    const RingTable m = restrict_ring(z60, m_labels);
    const RingClass rc = classify_ring(m);
    std::string actual = "carrier: " + join_labels(m.labels()) + "\n";
    actual += "kind: " + std::string(ring_kind_name(rc.kind)) + "\n";
    actual += "zero: " + std::to_string(m.zero()) + "\n";
    actual += "unity: " + (rc.unity ? std::to_string(*rc.unity) : "none") + "\n";
    checks.push_back({"m-field", read_fixture(fixtures, "m_field.txt"), std::move(actual), false});
  }
  {
    const RingTable sr = zn_ring(60, 6);
    const RingClass rc = classify_ring(sr);
    const SpecialVerdict<FieldWitness> v = is_special_ring(sr);
    std::string actual = "carrier: " + join_labels(sr.labels()) + "\n";
    actual += "kind: " + std::string(ring_kind_name(rc.kind)) + "\n";
    actual += std::string("special: ") + (v.special ? "true" : "false") + "\n";
    if (v.special) {
      const FieldWitness& w = v.witnesses.front();
      actual += "witness: " + join_labels(w.carrier) + "\n";
      actual += "witness_zero: " + std::to_string(w.zero) + "\n";
      actual += "witness_unity: " + std::to_string(w.unity) + "\n";
    }
    checks.push_back(
        {"sr-special-ring", read_fixture(fixtures, "sr_special_ring.txt"), std::move(actual), false});
  }
  {
    const StructureClass cls = classify(ss);
    const SpecialVerdict<GroupWitness> v = is_special_semigroup(ss, 2);
    std::string actual = "carrier: " + join_labels(ss.labels()) + "\n";
    actual += "kind: " + std::string(kind_name(cls.kind)) + "\n";
    actual += std::string("special: ") + (v.special ? "true" : "false") + "\n";
    if (v.special) {
      const GroupWitness& w = v.witnesses.front();
      actual += "witness: " + join_labels(w.carrier) + "\n";
      actual += "witness_identity: " + std::to_string(w.identity) + "\n";
    }
    checks.push_back({"ss-special-semigroup", read_fixture(fixtures, "ss_special_semigroup.txt"),
                      std::move(actual), false});
  }

  int passed = 0;
  for (Check& c : checks) {
    c.pass = c.expected == c.actual;
    if (c.pass) ++passed;
  }

  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const Check& c : checks)
      arr.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    ordered_json j;
    j["checks"] = std::move(arr);
    j["passed"] = passed;
    j["total"] = checks.size();
    out << j.dump(2) << '\n';
  } else {
    for (const Check& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
      if (!c.pass) {
        out << "--- expected ---\n" << c.expected;
        if (!c.expected.empty() && c.expected.back() != '\n') out << '\n';
        out << "--- actual ---\n" << c.actual;
        if (!c.actual.empty() && c.actual.back() != '\n') out << '\n';
      }
    }
    out << passed << "/" << checks.size() << " checks passed\n";
  }
  return passed == static_cast<int>(checks.size()) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite Cayley-table structures: classification, embedded groups and fields, "
               "special-structure search"};
  app.name("cayley");
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  add_format(&app);

  int min_order = 2;
  std::string file_path;

  CLI::App* analyze = app.add_subcommand("analyze", "classify a structure from a file");
  analyze->require_subcommand(1);
  CLI::App* analyze_table = analyze->add_subcommand("table", "analyze a Cayley-table file");
  analyze_table->add_option("file", file_path, "table file")->required();
  analyze_table->add_option("--min-order", min_order, "minimum witness group order");
  add_format(analyze_table);
  CLI::App* analyze_ring = analyze->add_subcommand("ring", "analyze a ring file");
  analyze_ring->add_option("file", file_path, "ring file")->required();
  add_format(analyze_ring);

  std::int64_t arg_a = 0;
  std::int64_t arg_n = 0;
  std::int64_t divisor = 1;

  CLI::App* zn = app.add_subcommand("zn", "structures inside Z_n");
  zn->require_subcommand(1);
  CLI::App* zn_orbit = zn->add_subcommand("orbit", "power orbit of a mod n");
  zn_orbit->add_option("a", arg_a, "base")->required();
  zn_orbit->add_option("n", arg_n, "modulus")->required();
  add_format(zn_orbit);
  CLI::App* zn_gen = zn->add_subcommand("gen", "multiplicative semigroup generated by a mod n");
  zn_gen->add_option("a", arg_a, "generator")->required();
  zn_gen->add_option("n", arg_n, "modulus")->required();
  zn_gen->add_option("--min-order", min_order, "minimum witness group order");
  add_format(zn_gen);
  CLI::App* zn_ring_cmd = zn->add_subcommand("ring", "the ring Z_n or its subring dZ_n");
  zn_ring_cmd->add_option("n", arg_n, "modulus")->required();
  zn_ring_cmd->add_option("--divisor", divisor, "restrict to multiples of this divisor");
  add_format(zn_ring_cmd);

  std::string n_range;
  std::string a_range;
  std::string out_path;

  CLI::App* search = app.add_subcommand("search", "scan ranges for special structures");
  search->require_subcommand(1);
  const auto add_search_options = [&](CLI::App* cmd, bool with_a) {
    cmd->add_option("--n", n_range, "modulus range <lo>..<hi>")->required();
    if (with_a) {
      cmd->add_option("--a", a_range, "generator range <lo>..<hi>");
      cmd->add_option("--min-order", min_order, "minimum witness group order");
    }
    cmd->add_option("--out", out_path, "write findings to this file");
    add_format(cmd);
  };
  CLI::App* search_semigroups =
      search->add_subcommand("semigroups", "special generated semigroups in Z_n");
  add_search_options(search_semigroups, true);
  CLI::App* search_rings = search->add_subcommand("rings", "special rings among Z_n and dZ_n");
  add_search_options(search_rings, false);
  CLI::App* search_ideals = search->add_subcommand("ideals", "special ideals dZ_n of Z_n");
  add_search_options(search_ideals, false);

  std::string fixtures = CAYLEY_FIXTURES_DIR;
  CLI::App* verify = app.add_subcommand("verify-paper", "re-derive the published worked examples");
  verify->add_option("--fixtures", fixtures, "directory holding the golden fixtures");
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze_table->parsed()) return report_table(parse_table_file(file_path), min_order, format, out);
    if (analyze_ring->parsed()) return report_ring(parse_ring_file(file_path), format, out);
    if (zn_orbit->parsed()) return report_orbit(power_orbit(arg_a, arg_n), format, out);
    if (zn_gen->parsed())
      return report_table(generated_mul_semigroup(arg_a, arg_n), min_order, format, out);
    if (zn_ring_cmd->parsed()) return report_ring(zn_ring(arg_n, divisor), format, out);
    if (search_semigroups->parsed() || search_rings->parsed() || search_ideals->parsed()) {
      SearchSpec spec;
      std::tie(spec.n_lo, spec.n_hi) = parse_range(n_range);
      spec.min_group_order = min_order;
      if (search_semigroups->parsed()) {
        spec.kind = ScanKind::SpecialSemigroup;
        if (!a_range.empty()) spec.generator_range = parse_range(a_range);
        return report_findings(scan_special_semigroups(spec), out_path, format, out);
      }
      if (search_rings->parsed()) {
        spec.kind = ScanKind::SpecialRing;
        return report_findings(scan_special_rings(spec), out_path, format, out);
      }
      spec.kind = ScanKind::SpecialIdeal;
      return report_findings(scan_special_ideals(spec), out_path, format, out);
    }
    if (verify->parsed()) return run_verify_paper(fixtures, format, out);
  } catch (const InvalidSpecError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace cayley::cli
