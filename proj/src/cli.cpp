#include "nsg/cli.hpp"

#include <charconv>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsg/decomposition.hpp"
#include "nsg/families.hpp"
#include "nsg/repro.hpp"

namespace nsg::cli {

namespace {

using json = nlohmann::ordered_json;

Int parse_int(const std::string& s) {
  Int v{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    throw Error(Errc::invalid_input, "cannot parse integer '" + s + "'");
  return v;
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(parse_int(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* truefalse(bool b) { return b ? "true" : "false"; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json semigroup_json(const Semigroup& s) {
  return json{{"generators", s.generators()},
              {"frobenius", s.frobenius()},
              {"gaps", s.gaps()}};
}

// Input descriptor shared by info and decompose: exactly one of --gens,
// --gaps, --halfline, --skn.
struct InputOpts {
  std::string gens_str, gaps_str, skn_str;
  Int halfline_n = 0;
  CLI::Option* gens = nullptr;
  CLI::Option* gaps = nullptr;
  CLI::Option* half = nullptr;
  CLI::Option* skn_opt = nullptr;

  void attach(CLI::App* cmd) {
    gens = cmd->add_option("--gens", gens_str,
                           "comma-separated generators, e.g. 3,10,11");
    gaps = cmd->add_option("--gaps", gaps_str, "comma-separated gap set");
    half = cmd->add_option("--halfline", halfline_n,
                           "half-line semigroup {0} u {n+1, n+2, ...}");
    skn_opt = cmd->add_option("--skn", skn_str,
                              "family <k, n, n+1, ..., n+k-1> as k,n");
  }

  std::pair<Semigroup, json> resolve() const {
    int supplied = (gens->count() > 0) + (gaps->count() > 0) +
                   (half->count() > 0) + (skn_opt->count() > 0);
    if (supplied != 1)
      throw Error(Errc::invalid_input,
                  "exactly one of --gens, --gaps, --halfline, --skn is required");
    if (gens->count()) {
      std::vector<Int> v = parse_int_list(gens_str);
      return {Semigroup::from_generators(v),
              json{{"kind", "gens"}, {"values", v}}};
    }
    if (gaps->count()) {
      std::vector<Int> v = parse_int_list(gaps_str);
      return {Semigroup::from_gaps(v), json{{"kind", "gaps"}, {"values", v}}};
    }
    if (half->count()) {
      return {halfline(halfline_n),
              json{{"kind", "halfline"}, {"n", halfline_n}}};
    }
    std::vector<Int> kn = parse_int_list(skn_str);
    if (kn.size() != 2)
      throw Error(Errc::invalid_input, "--skn needs exactly two values: k,n");
    return {skn(kn[0], kn[1]),
            json{{"kind", "skn"}, {"k", kn[0]}, {"n", kn[1]}}};
  }
};

struct OutputOpts {
  bool as_json = false;
  bool as_csv = false;
  bool quiet = false;

  void attach(CLI::App* cmd) {
    CLI::Option* j = cmd->add_flag("--json", as_json, "machine-readable JSON");
    CLI::Option* c = cmd->add_flag("--csv", as_csv, "key,value CSV");
    j->excludes(c);
    c->excludes(j);
    cmd->add_flag("--quiet", quiet, "suppress timing on stderr");
  }
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int run_info(const InputOpts& input, const OutputOpts& output,
             std::ostream& out) {
  auto [s, echo] = input.resolve();
  const bool full = s.is_naturals();
  InvariantBundle inv;
  if (!full) inv = s.invariants();
  else {
    inv.symmetric = s.is_symmetric();
    inv.pseudo_symmetric = s.is_pseudo_symmetric();
    inv.irreducible = s.is_irreducible();
  }

  if (output.as_json) {
    json doc{{"command", "info"},
             {"input", echo},
             {"semigroup", semigroup_json(s)},
             {"multiplicity", s.multiplicity()},
             {"genus", s.genus()}};
    if (full) {
      doc["pseudo_frobenius"] = nullptr;
      doc["bpf"] = nullptr;
      doc["special_gaps"] = nullptr;
    } else {
      doc["pseudo_frobenius"] = inv.pseudo_frobenius;
      doc["bpf"] = inv.bpf;
      doc["special_gaps"] = inv.special_gaps;
    }
    doc["symmetric"] = inv.symmetric;
    doc["pseudo_symmetric"] = inv.pseudo_symmetric;
    doc["irreducible"] = inv.irreducible;
    emit(out, doc);
    return 0;
  }

  const std::string pf_line =
      full ? "(undefined: full semigroup)" : join(inv.pseudo_frobenius);
  const std::string bpf_line =
      full ? "(undefined: full semigroup)" : join(inv.bpf);
  const std::string special_line =
      full ? "(undefined: full semigroup)" : join(inv.special_gaps);
  if (output.as_csv) {
    out << "key,value\n";
    out << "generators," << join(s.generators()) << "\n";
    out << "frobenius," << s.frobenius() << "\n";
    out << "multiplicity," << s.multiplicity() << "\n";
    out << "genus," << s.genus() << "\n";
    out << "gaps," << join(s.gaps()) << "\n";
    out << "pseudo_frobenius," << csv_escape(pf_line) << "\n";
    out << "bpf," << csv_escape(bpf_line) << "\n";
    out << "special_gaps," << csv_escape(special_line) << "\n";
    out << "symmetric," << truefalse(inv.symmetric) << "\n";
    out << "pseudo_symmetric," << truefalse(inv.pseudo_symmetric) << "\n";
    out << "irreducible," << truefalse(inv.irreducible) << "\n";
    return 0;
  }

  out << "generators:       " << join(s.generators()) << "\n";
  out << "frobenius:        " << s.frobenius() << "\n";
  out << "multiplicity:     " << s.multiplicity() << "\n";
  out << "genus:            " << s.genus() << "\n";
  out << "gaps:             "
      << (s.genus() ? join(s.gaps()) : std::string("(none)")) << "\n";
  out << "pseudo_frobenius: " << pf_line << "\n";
  out << "bpf:              " << bpf_line << "\n";
  out << "special_gaps:     " << special_line << "\n";
  out << "symmetric:        " << yesno(inv.symmetric) << "\n";
  out << "pseudo_symmetric: " << yesno(inv.pseudo_symmetric) << "\n";
  out << "irreducible:      " << yesno(inv.irreducible) << "\n";
  return 0;
}

void emit_components_human(std::ostream& out,
                           const std::vector<Semigroup>& comps) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    out << "component " << (i + 1) << ":      generators "
        << join(comps[i].generators()) << " | frobenius "
        << comps[i].frobenius() << " | gaps " << join(comps[i].gaps()) << "\n";
  }
}

int run_decompose(const InputOpts& input, const OutputOpts& output,
                  const std::string& mode, std::uint64_t cap,
                  std::ostream& out) {
  auto [s, echo] = input.resolve();
  if (mode == "bounds") {
    BoundsReport b = bounds(s);
    if (output.as_json) {
      json xi_sets = json::array();
      for (const XiSet& x : b.xi_sets)
        xi_sets.push_back(json{{"a", x.a}, {"members", x.members}});
      emit(out, json{{"command", "decompose"},
                     {"input", echo},
                     {"mode", "bounds"},
                     {"m", b.m},
                     {"h", b.h},
                     {"witness_values", b.witness_values},
                     {"xi_sets", xi_sets}});
    } else if (output.as_csv) {
      out << "key,value\n";
      out << "mode,bounds\n";
      out << "m," << b.m << "\n";
      out << "h," << b.h << "\n";
      out << "witness_values," << join(b.witness_values) << "\n";
      out << "\na,xi\n";
      for (const XiSet& x : b.xi_sets)
        out << x.a << "," << join(x.members) << "\n";
    } else {
      out << "mode:             bounds\n";
      out << "m:                " << b.m << "\n";
      out << "h:                " << b.h << "\n";
      out << "witness_values:   " << join(b.witness_values) << "\n";
      for (const XiSet& x : b.xi_sets)
        out << "xi(" << x.a << "):            " << join(x.members) << "\n";
    }
    return 0;
  }

  Decomposition d = mode == "exact" ? minimal_decomposition(s, cap)
                                    : constructive_decomposition(s);
  VerifyResult v = verify_decomposition(s, d.components);
  const char* method = d.method == DecompositionMethod::exact_cover
                           ? "exact-cover"
                           : "constructive";
  if (output.as_json) {
    json comps = json::array();
    for (const Semigroup& c : d.components) comps.push_back(semigroup_json(c));
    emit(out, json{{"command", "decompose"},
                   {"input", echo},
                   {"mode", mode},
                   {"size", d.components.size()},
                   {"exact_minimum", d.exact_minimum},
                   {"method", method},
                   {"verified", v.ok},
                   {"components", comps}});
  } else if (output.as_csv) {
    out << "key,value\n";
    out << "mode," << mode << "\n";
    out << "size," << d.components.size() << "\n";
    out << "exact_minimum," << truefalse(d.exact_minimum) << "\n";
    out << "method," << method << "\n";
    out << "verified," << truefalse(v.ok) << "\n";
    out << "\ncomponent,frobenius,generators,gaps\n";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      const Semigroup& c = d.components[i];
      out << (i + 1) << "," << c.frobenius() << "," << join(c.generators())
          << "," << join(c.gaps()) << "\n";
    }
  } else {
    out << "mode:             " << mode << "\n";
    out << "size:             " << d.components.size() << "\n";
    out << "exact_minimum:    " << yesno(d.exact_minimum) << "\n";
    out << "method:           " << method << "\n";
    out << "verified:         " << yesno(v.ok) << "\n";
    emit_components_human(out, d.components);
  }
  return v.ok ? 0 : 2;
}

int run_repro(const OutputOpts& output, std::uint64_t cap, std::ostream& out,
              std::ostream& err) {
  std::vector<repro::Row> rows = repro::run_rows(cap);
  std::size_t passed = 0;
  for (const repro::Row& r : rows) passed += r.pass;

  if (output.as_json) {
    json jrows = json::array();
    for (const repro::Row& r : rows)
      jrows.push_back(
          json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(out, json{{"command", "repro"},
                   {"rows", jrows},
                   {"passed", passed},
                   {"total", rows.size()}});
  } else if (output.as_csv) {
    out << "row,pass,detail\n";
    for (const repro::Row& r : rows)
      out << csv_escape(r.name) << "," << truefalse(r.pass) << ","
          << csv_escape(r.detail) << "\n";
  } else {
    for (const repro::Row& r : rows)
      out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail
          << ")\n";
    out << "repro: " << passed << "/" << rows.size() << " rows passed\n";
  }
  if (!output.quiet) {
    for (const repro::Row& r : rows)
      err << "# " << static_cast<long long>(r.elapsed_ms) << " ms  " << r.name
          << "\n";
  }
  return passed == rows.size() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact invariants and irreducible decompositions of numerical semigroups"};
  app.name("nsg");
  app.require_subcommand(1);

  CLI::App* info_cmd =
      app.add_subcommand("info", "invariants of a numerical semigroup");
  InputOpts info_input;
  OutputOpts info_output;
  info_input.attach(info_cmd);
  info_output.attach(info_cmd);

  CLI::App* dec_cmd = app.add_subcommand(
      "decompose", "decompositions into irreducible oversemigroups");
  InputOpts dec_input;
  OutputOpts dec_output;
  dec_input.attach(dec_cmd);
  dec_output.attach(dec_cmd);
  std::string mode = "exact";
  dec_cmd->add_option("--mode", mode, "exact | construct | bounds")
      ->check(CLI::IsMember({"exact", "construct", "bounds"}));
  std::uint64_t dec_cap = kDefaultEnumerationCap;
  dec_cmd->add_option("--cap", dec_cap, "oversemigroup enumeration cap");

  CLI::App* repro_cmd = app.add_subcommand(
      "repro", "recompute the family results and report pass/fail rows");
  OutputOpts repro_output;
  repro_output.attach(repro_cmd);
  std::uint64_t repro_cap = kDefaultEnumerationCap;
  repro_cmd->add_option("--cap", repro_cap, "oversemigroup enumeration cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const OutputOpts& active_output = app.got_subcommand(info_cmd)  ? info_output
                                    : app.got_subcommand(dec_cmd) ? dec_output
                                                                  : repro_output;
  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (app.got_subcommand(info_cmd)) {
      code = run_info(info_input, info_output, out);
    } else if (app.got_subcommand(dec_cmd)) {
      code = run_decompose(dec_input, dec_output, mode, dec_cap, out);
    } else {
      code = run_repro(repro_output, repro_cap, out, err);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    if (app.got_subcommand(dec_cmd))
      err << "hint: re-run with --mode bounds (or --mode construct) for "
             "cap-independent results, or raise --cap\n";
    code = 3;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  }
  if (!active_output.quiet) {
    auto t1 = std::chrono::steady_clock::now();
    err << "# elapsed_ms="
        << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
               .count()
        << "\n";
  }
  return code;
}

} // namespace nsg::cli
