#include "modorb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "modorb/error.hpp"
#include "modorb/json_io.hpp"
#include "modorb/perm_orbifold.hpp"
#include "modorb/render.hpp"
#include "modorb/restricted_smatrix.hpp"
#include "modorb/sl2z.hpp"
#include "modorb/validation.hpp"

namespace modorb::cli {
namespace {

Tolerances default_tolerances() {
  Tolerances tol;
  if (const char* eps = std::getenv("MODORB_EPS")) tol.eps = parse_real(eps);
  if (const char* eps_int = std::getenv("MODORB_EPS_INT")) tol.eps_int = parse_real(eps_int);
  return tol;
}

ModularDatum load_datum(const std::string& path) { return io::parse_modular_datum(io::read_file(path)); }

// Structural checks on a datum written by `perm`.
ValidationReport orbifold_structure(const io::json& doc, const ModularDatum& d) {
  ValidationReport report;
  const auto k = doc.at("k").get<int>();
  const auto rank = doc.at("source_rank").get<std::size_t>();
  const auto expected = perm::orbifold_module_count(rank, k);
  report.add({"module_count", d.rank() == expected, 0,
              std::to_string(d.rank()) + " modules, expected " + std::to_string(expected)});
  const auto& first = doc.at("modules").at(0);
  const bool vacuum = first.value("label_kind", "") == "diag" && first.value("i", -1) == 0 && first.value("a", -1) == 0;
  report.add({"vacuum_label", vacuum, 0, "module 0 is diag(i=0, a=0)"});
  std::size_t kinds_ok = 0;
  for (const auto& m : doc.at("modules")) {
    const auto kind = m.value("label_kind", "");
    kinds_ok += (kind == "diag" || kind == "offdiag" || kind == "twisted") ? 1 : 0;
  }
  report.add({"label_kinds", kinds_ok == d.rank(), 0, "every module carries a known label_kind"});
  return report;
}

int exit_for(const ValidationReport& r) { return r.passed() ? kExitOk : kExitCheckFailed; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular data of rational VOA orbifolds", "modorb"};
  app.require_subcommand(1);
  app.fallthrough();

  Tolerances tol;
  std::string format_text = "pretty";
  std::string input;
  std::string output;
  std::string convention_text;
  int k = 0;
  std::vector<std::int64_t> entries;

  try {
    tol = default_tolerances();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  app.add_option("--eps", tol.eps, "tolerance for matrix identities");
  app.add_option("--eps-int", tol.eps_int, "tolerance for fusion integrality");
  app.add_option("--format", format_text, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* validate = app.add_subcommand("validate", "validate a modular datum");
  validate->add_option("input", input, "datum JSON")->required();
  auto* check = app.add_subcommand("check", "validate a datum or orbifold output, with dimensions");
  check->add_option("input", input, "datum JSON")->required();
  auto* fusion = app.add_subcommand("fusion", "Verlinde fusion rules");
  fusion->add_option("input", input, "datum JSON")->required();
  auto* tmatrix = app.add_subcommand("tmatrix", "T-matrix phases");
  tmatrix->add_option("input", input, "datum JSON")->required();
  auto* permcmd = app.add_subcommand("perm", "cyclic permutation orbifold of prime order k");
  permcmd->add_option("--k", k, "prime order of the cyclic permutation")->required();
  permcmd->add_option("input", input, "datum JSON of V")->required();
  permcmd->add_option("-o,--output", output, "write the orbifold datum here");
  permcmd->add_option("--convention", convention_text, "minus | plus (default: minus, falling back to plus)");
  auto* restrictedcmd = app.add_subcommand("restricted", "restricted S-matrix from orbit data");
  restrictedcmd->add_option("input", input, "orbit/character/block JSON")->required();
  restrictedcmd->add_option("-o,--output", output, "write the result here");
  auto* sl2z = app.add_subcommand("sl2z", "SL2(Z) utilities");
  sl2z->require_subcommand(1);
  sl2z->fallthrough();
  auto* decompose = sl2z->add_subcommand("decompose", "factor (a b; c d) into S and T");
  decompose->add_option("entries", entries, "a b c d")->required()->expected(4);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const auto format = render::parse_format(format_text);

    if (validate->parsed()) {
      const auto report = validate_modular_datum(load_datum(input), tol);
      out << render::report(report, format);
      return exit_for(report);
    }
    if (check->parsed()) {
      const auto doc = io::json::parse(io::read_file(input), nullptr, false);
      if (doc.is_discarded()) throw InputError("malformed JSON in " + input);
      const auto d = io::datum_from_json(doc);
      auto report = validate_modular_datum(d, tol);
      if (doc.contains("k") && doc.contains("source_rank")) report.append(orbifold_structure(doc, d));
      out << render::report(report, format);
      if (report.find("vacuum_row_positive")->passed) out << render::quantum_dimensions(d, format);
      return exit_for(report);
    }
    if (fusion->parsed()) {
      const auto d = load_datum(input);
      std::vector<std::string> labels;
      for (const auto& m : d.modules()) labels.push_back(m.label);
      const auto result = verlinde_fusion(d, tol.eps);
      out << render::fusion(result, labels, format);
      return result.max_residual <= tol.eps_int && result.nonnegative ? kExitOk : kExitCheckFailed;
    }
    if (tmatrix->parsed()) {
      out << render::t_matrix(load_datum(input), format);
      return kExitOk;
    }
    if (permcmd->parsed()) {
      const auto v = load_datum(input);
      const auto orbifold = convention_text.empty()
                                ? perm::build_orbifold_datum_auto(v, k, tol)
                                : perm::build_orbifold_datum(v, k, perm::parse_convention(convention_text), tol);
      const auto doc = io::dump(io::to_json(orbifold));
      if (output.empty()) {
        out << doc;
      } else {
        io::write_file(output, doc);
        if (format != render::Format::kJson) {
          out << "modules: " << orbifold.datum.rank() << "\n";
          out << "convention: " << perm::to_string(orbifold.convention) << "\n";
        }
        out << render::report(orbifold.report, format);
      }
      return exit_for(orbifold.report);
    }
    if (restrictedcmd->parsed()) {
      const auto in = io::parse_restricted_input(io::read_file(input));
      const auto report = restricted::validate_group_data(in, tol);
      const auto result = restricted::assemble_restricted_S(in);
      auto doc = io::to_json(result, in);
      doc["validation"] = io::to_json(report);
      if (output.empty()) {
        out << io::dump(doc);
      } else {
        io::write_file(output, io::dump(doc));
        out << render::report(report, format);
      }
      return exit_for(report);
    }
    if (decompose->parsed()) {
      const SL2Matrix m(entries[0], entries[1], entries[2], entries[3]);
      const auto word = decompose_to_generators(m);
      const auto back = evaluate_word_int(word);
      const bool ok = back == m;
      if (format == render::Format::kJson) {
        out << io::dump({{"matrix", to_string(m)}, {"word", to_string(word)}, {"round_trip", ok}});
      } else {
        out << "word: " << to_string(word) << "\n";
        out << "round trip: " << (ok ? "ok " : "MISMATCH ") << to_string(back) << "\n";
      }
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const io::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace modorb::cli
