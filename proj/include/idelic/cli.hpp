#pragma once

// Command-line front end. Every subcommand reads a presentation file (or "-"
// for stdin), prints one compact JSON document on stdout and returns
//   0  success
//   1  fuzz found a property violation
//   2  invalid input or usage; stdout then holds {"error": code, "detail": ...}

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "idelic/class_field.hpp"
#include "idelic/error.hpp"
#include "idelic/fuzz.hpp"
#include "idelic/ideles.hpp"
#include "idelic/io.hpp"
#include "idelic/local_theory.hpp"
#include "idelic/presentation.hpp"

namespace idelic::cli {

using json = nlohmann::json;

namespace detail {

inline std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, what + ": " + e.what());
  }
}

// Inline JSON, or "@path" to read it from a file.
inline json json_argument(const std::string& value, const std::string& what) {
  if (!value.empty() && value[0] == '@') return parse_json(read_text(value.substr(1)), what);
  return parse_json(value, what);
}

inline Manifold load_manifold(const std::string& path) {
  return load_and_validate(io::presentation_from_json(parse_json(read_text(path), path)));
}

inline std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

inline Integer parse_integer(const std::string& text, const std::string& what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, what + " is not an integer: '" + text + "'");
  return v;
}

inline json longitude_json(const LongitudeData& d) {
  return {{"lambda", {io::integer_to_json(d.lambda.x), io::integer_to_json(d.lambda.y)}},
          {"index", io::integer_to_json(d.index)},
          {"basis", d.basis_flag}};
}

inline json error_json(const Error& e) {
  return {{"error", std::string(error_code_name(e.code()))}, {"detail", e.what()}};
}

}  // namespace detail

/// Runs one invocation; args excludes the program name.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic of knots in rational homology spheres", "idelic"};
  app.require_subcommand(1);

  std::string input, a_text, b_text, divisor_text, phi_text, link_text, target_text, knot, counterexample;
  std::string n_text;
  bool link_given = false;
  fuzz::FuzzConfig fcfg;
  fcfg.threads = 1;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "presentation JSON file, or - for stdin")->required(); };
  auto add_link = [&](CLI::App* sub) {
    sub->add_option("--link", link_text, "comma-separated sublink L (default: every knot)");
  };

  auto* info = app.add_subcommand("info", "H_1(M), admissibility and per-knot local data");
  add_input(info);

  auto* lk = app.add_subcommand("lk", "rational linking number of two knots");
  add_input(lk);
  std::string knot_j, knot_k;
  lk->add_option("j", knot_j)->required();
  lk->add_option("k", knot_k)->required();

  auto* longitude = app.add_subcommand("longitude", "preferred longitude of a knot");
  add_input(longitude);
  longitude->add_option("knot", knot)->required();

  auto* class_group = app.add_subcommand("class-group", "idele class group C_L and coker of rho~");
  add_input(class_group);
  add_link(class_group);

  auto* principal = app.add_subcommand("principal-basis", "basis of the principal ideles Ker rho~");
  add_input(principal);
  add_link(principal);

  auto* delta = app.add_subcommand("delta", "principal idele with a given divisor");
  add_input(delta);
  add_link(delta);
  delta->add_option("--divisor", divisor_text, "e.g. K1=1,K2=-2")->required();

  auto* is_princ = app.add_subcommand("is-principal", "test whether an idele lies in Ker rho~");
  add_input(is_princ);
  add_link(is_princ);
  is_princ->add_option("--a", a_text, "idele JSON")->required();

  auto* pairing = app.add_subcommand("pairing", "global pairing iota(a, b)");
  add_input(pairing);
  pairing->add_option("--a", a_text, "idele JSON")->required();
  pairing->add_option("--b", b_text, "idele JSON")->required();

  auto add_cover = [&](CLI::App* sub) {
    sub->add_option("--phi", phi_text, "cover JSON: {branch_link, target, phi} or a bare phi array")->required();
    sub->add_option("--target", target_text, "comma-separated orders, with a bare phi array");
    add_link(sub);
  };
  auto* cover = app.add_subcommand("cover", "validate an abelian cover");
  add_input(cover);
  add_cover(cover);

  auto* symbol = app.add_subcommand("symbol", "global and local Artin symbols of an idele");
  add_input(symbol);
  add_cover(symbol);
  symbol->add_option("--a", a_text, "idele JSON")->required();

  auto* decomp = app.add_subcommand("decomp", "ramification e, residue degree f, splitting g");
  add_input(decomp);
  add_cover(decomp);
  decomp->add_option("--knot", knot)->required();

  auto* kummer = app.add_subcommand("kummer", "Z/n cover attached to a principal divisor");
  add_input(kummer);
  add_link(kummer);
  kummer->add_option("--divisor", divisor_text)->required();
  kummer->add_option("--n", n_text)->required();

  auto* hilbert = app.add_subcommand("hilbert", "local symbol iota_K(a, b) mod n");
  add_input(hilbert);
  hilbert->add_option("--a", a_text)->required();
  hilbert->add_option("--b", b_text)->required();
  hilbert->add_option("--knot", knot)->required();
  hilbert->add_option("--n", n_text)->required();

  auto* fz = app.add_subcommand("fuzz", "randomised check of the reciprocity laws");
  fz->add_option("--trials", fcfg.trials);
  fz->add_option("--seed", fcfg.seed);
  fz->add_option("--max-surgery", fcfg.max_surgery);
  fz->add_option("--max-link", fcfg.max_link);
  fz->add_option("--entry-bound", fcfg.entry_bound);
  fz->add_option("--coeff-bound", fcfg.coeff_bound);
  fz->add_option("--threads", fcfg.threads, "worker threads, 0 = all cores (report is identical)");
  fz->add_option("--counterexample", counterexample, "write the shrunk failing input here");
  fz->add_flag("--corrupt-oracle", fcfg.corrupt_oracle, "self-test: deliberately break the pairing check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << detail::error_json(Error(ErrorCode::UsageError, e.what())).dump() << "\n";
    return 2;
  }
  link_given = !link_text.empty();

  try {
    auto sub = app.get_subcommands().front();
    if (sub == fz) {
      auto report = fuzz::fuzz_suite(fcfg);
      if (report.failure && !counterexample.empty()) {
        std::ofstream f(counterexample);
        if (!f) throw Error(ErrorCode::IoError, "cannot write '" + counterexample + "'");
        f << io::presentation_to_json(report.failure->instance).dump(2) << "\n";
      }
      out << fuzz::report_to_json(report).dump() << "\n";
      err << "fuzz: " << fcfg.trials << " trials in " << report.wall_seconds << " s\n";
      return report.ok() ? 0 : 1;
    }

    const Manifold m = detail::load_manifold(input);
    const std::vector<std::string> link = link_given ? detail::split_names(link_text) : m.knot_names();

    auto load_cover = [&]() -> CoverSpec {
      json j = detail::json_argument(phi_text, "--phi");
      if (j.is_object()) {
        if (link_given || !target_text.empty())
          throw Error(ErrorCode::UsageError, "--link/--target conflict with a full cover object");
        return io::cover_from_json(m, j);
      }
      if (target_text.empty()) throw Error(ErrorCode::UsageError, "a bare phi array needs --target");
      json full = {{"branch_link", link}, {"phi", j}, {"target", json::array()}};
      for (const auto& t : detail::split_names(target_text)) full["target"].push_back(t);
      return io::cover_from_json(m, full);
    };

    json result;
    if (sub == info) {
      auto cert = is_admissible(m);
      json knots = json::object();
      for (const auto& k : m.knot_names()) {
        json entry = detail::longitude_json(preferred_longitude(m, k));
        entry.erase("index");
        entry["order"] = io::integer_to_json(knot_class(m, k).order);
        knots[k] = entry;
      }
      result = {{"h1", io::string_list(m.h1()->invariant_factors())}, {"admissible", cert.admissible}, {"knots", knots}};
    } else if (sub == lk) {
      result = {{"lk", io::rational_string(linking_number(m, knot_j, knot_k))}};
    } else if (sub == longitude) {
      result = detail::longitude_json(preferred_longitude(m, knot));
      result["knot"] = knot;
    } else if (sub == class_group) {
      auto cg = idele_class_group(m, link);
      result = {{"link", cg.sublink},
                {"class_group", io::string_list(cg.class_group_factors)},
                {"cokernel", io::string_list(cg.cokernel_factors)},
                {"admissible", cg.cokernel_factors.empty()}};
    } else if (sub == principal) {
      json basis = json::array();
      for (const auto& b : principal_lattice_basis(m, link)) basis.push_back(io::idele_to_json(b));
      result = {{"link", link}, {"basis", basis}};
    } else if (sub == delta) {
      result = {{"delta", io::idele_to_json(delta_from_divisor(m, link, io::divisor_from_string(divisor_text)))}};
    } else if (sub == is_princ) {
      Idele a = io::idele_from_json(detail::json_argument(a_text, "--a"));
      result = {{"principal", is_principal(m, link, a)}};
    } else if (sub == pairing) {
      Idele a = io::idele_from_json(detail::json_argument(a_text, "--a"));
      Idele b = io::idele_from_json(detail::json_argument(b_text, "--b"));
      result = {{"iota", io::integer_string(global_pairing(a, b))}};
    } else if (sub == cover) {
      CoverSpec h = load_cover();
      result = {{"cover", io::cover_to_json(h)}, {"surjective", is_surjective(h)}};
    } else if (sub == symbol) {
      CoverSpec h = load_cover();
      Idele a = io::idele_from_json(detail::json_argument(a_text, "--a"));
      json local = json::object();
      for (const auto& k : h.branch_link()) local[k] = io::int_list(local_symbol(a.at(k), h));
      result = {{"global", io::int_list(global_symbol(a, h))}, {"local", local}};
    } else if (sub == decomp) {
      CoverSpec h = load_cover();
      auto d = decomposition_data(h, knot);
      result = {{"knot", knot},
                {"e", io::integer_to_json(d.e)},
                {"f", io::integer_to_json(d.f)},
                {"g", io::integer_to_json(d.g)}};
    } else if (sub == kummer) {
      auto kc = kummer_cover(m, link, io::divisor_from_string(divisor_text), detail::parse_integer(n_text, "--n"));
      result = {{"cover", io::cover_to_json(kc.cover)},
                {"b", io::idele_to_json(kc.b)},
                {"branch_locus", kc.branch_locus}};
    } else if (sub == hilbert) {
      Idele a = io::idele_from_json(detail::json_argument(a_text, "--a"));
      Idele b = io::idele_from_json(detail::json_argument(b_text, "--b"));
      if (!m.has_knot(knot)) throw Error(ErrorCode::UnknownKnot, "no knot named '" + knot + "'");
      result = {{"symbol", io::integer_string(hilbert_symbol(a, b, knot, detail::parse_integer(n_text, "--n")))}};
    }
    out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    out << detail::error_json(e).dump() << "\n";
    return 2;
  }
}

}  // namespace idelic::cli
