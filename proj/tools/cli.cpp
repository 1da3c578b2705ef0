// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <permion/errors.hpp>
#include <permion/first_quant.hpp>
#include <permion/fock.hpp>
#include <permion/group.hpp>
#include <permion/group_algebra.hpp>
#include <permion/limits.hpp>
#include <permion/representation.hpp>
#include <permion/schur_weyl.hpp>
#include <permion/young.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace permion::cli {

int exit_code(Status s) noexcept {
  switch (s) {
    case Status::ok: return 0;
    case Status::verification_failed: return 1;
    case Status::usage_error: return 2;
  }
  return 2;
}

namespace {

using nlohmann::json;

// Any library error raised while interpreting flags is a usage error; only
// verify checks produce verification_failed.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string format = "json";
  std::size_t n = 0;
  std::string emit;
  std::string kind;
  std::string element;
  std::string ordering;
  std::string frame;
  std::string tableau;
  std::size_t modes = 0;
  std::string statistics = "fermion";
  std::size_t truncation = 1;
  std::size_t mode = 0;
  std::string ladder = "create";
  std::string sign = "jordan-wigner";
  std::string occupation;
  std::size_t d = 0;
  std::size_t particles = 0;
  std::string amplitudes;
  std::string check;
  std::size_t dim = 0;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string dims;
  std::string family = "majorana";
};

std::vector<std::size_t> parse_size_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Usage(std::string("malformed ") + what + " \"" + text + "\"");
    }
    out.push_back(std::stoul(field));
  }
  if (out.empty()) throw Usage(std::string("empty ") + what);
  return out;
}

json cycle_list(const std::vector<Permutation>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format_cycles(p));
  return out;
}

json optional_pair(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

json optional_pair(const std::optional<std::pair<Permutation, Permutation>>& p) {
  if (!p) return nullptr;
  return json::array({format_cycles(p->first), format_cycles(p->second)});
}

void need(bool present, const char* flag, const std::string& check) {
  if (!present) throw Usage(check + " needs " + flag);
}

CommandResult result(std::string kind, json payload, Status s = Status::ok) {
  CommandResult r;
  r.status = s;
  r.kind = std::move(kind);
  r.payload = std::move(payload);
  return r;
}

// group ---------------------------------------------------------------------

CommandResult cmd_group(const Flags& f) {
  if (f.emit == "elements") return result("elements", cycle_list(enumerate_group(f.n)));
  if (f.emit == "table") {
    const auto t = multiplication_table(f.n);
    json rows = json::array();
    for (const auto& row : t.table) {
      json r = json::array();
      for (std::size_t k : row) r.push_back(format_cycles(t.elements[k]));
      rows.push_back(std::move(r));
    }
    return result("table", {{"degree", f.n},
                            {"elements", cycle_list(t.elements)},
                            {"table", std::move(rows)},
                            {"latin_square", t.is_latin_square()}});
  }
  json classes = json::array();
  for (const auto& [type, members] : conjugacy_classes(f.n)) {
    classes.push_back({{"cycle_type", to_string(type)}, {"size", members.size()}, {"elements", cycle_list(members)}});
  }
  return result("classes", std::move(classes));
}

// rep -----------------------------------------------------------------------

ElementOrdering parse_ordering(const std::string& text, std::size_t n) {
  std::vector<Permutation> els;
  std::stringstream ss(text);
  std::string word;
  while (std::getline(ss, word, ';')) els.push_back(parse_word(word, n));
  return ElementOrdering(std::move(els));
}

CommandResult cmd_rep(const Flags& f) {
  const RepKind kind = rep_kind_from_string(f.kind);
  if (kind == RepKind::custom) throw Usage("custom representations cannot be built from flags");
  if (!f.ordering.empty() && kind != RepKind::regular) throw Usage("--ordering applies to the regular representation");
  const Representation rep =
      f.ordering.empty() ? make_rep(f.n, kind) : regular_rep(f.n, parse_ordering(f.ordering, f.n));
  if (f.element.empty()) return result("representation", to_json(rep));
  const Permutation g = parse_word(f.element, f.n);
  return result("matrix", {{"kind", to_string(kind)},
                           {"n", f.n},
                           {"dim", rep.dim()},
                           {"element", format_cycles(g)},
                           {"matrix", to_json(rep.at(g))}});
}

// tableaux / young ----------------------------------------------------------

json tableau_rows(const YoungTableau& t) { return t.rows(); }

CommandResult cmd_tableaux(const Flags& f) {
  const YoungFrame frame = parse_frame(f.frame);
  json list = json::array();
  for (const auto& t : standard_tableaux(frame)) list.push_back(tableau_rows(t));
  return result("tableaux", {{"frame", format_frame(frame)},
                             {"count", list.size()},
                             {"hook_count", tableau_count_hook(frame)},
                             {"tableaux", std::move(list)}});
}

json idempotent_json(const YoungTableau& t) {
  const auto report = verify_idempotent(young_operator(t));
  const std::size_t n = t.size();
  const Rational expected(static_cast<std::int64_t>(factorial(n) / tableau_count_hook(t.frame())));
  const bool ok = report.is_proportional && report.constant == expected;
  return {{"tableau", format_tableau(t)},
          {"proportional", report.is_proportional},
          {"constant", report.constant ? json(report.constant->str()) : json(nullptr)},
          {"expected_constant", expected.str()},
          {"ok", ok}};
}

CommandResult cmd_young(const Flags& f) {
  const YoungTableau t = parse_tableau(f.tableau);
  if (!t.is_standard()) throw Usage("tableau " + format_tableau(t) + " is not standard");
  json out = idempotent_json(t);
  out["row_symmetrizer"] = to_json(row_symmetrizer(t));
  out["column_antisymmetrizer"] = to_json(col_antisymmetrizer(t));
  out["operator"] = to_json(young_operator(t));
  return result("young", std::move(out));
}

// fock ----------------------------------------------------------------------

LadderKind ladder_kind(const std::string& s) {
  if (s == "create") return LadderKind::create;
  if (s == "annihilate") return LadderKind::annihilate;
  throw Usage("unknown ladder \"" + s + "\"");
}

SignConvention sign_convention(const std::string& s) {
  if (s == "jordan-wigner") return SignConvention::jordan_wigner;
  if (s == "none") return SignConvention::none;
  throw Usage("unknown sign convention \"" + s + "\"");
}

CommandResult cmd_fock(const Flags& f) {
  const Statistics stats = statistics_from_string(f.statistics);
  const FockBasis basis(f.modes, stats, f.truncation);
  const json header = {{"modes", f.modes}, {"statistics", to_string(stats)}, {"truncation", basis.truncation()}};

  if (f.emit == "basis") {
    json states = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) states.push_back(basis.state(i).occupations);
    json out = header;
    out["size"] = basis.size();
    out["states"] = std::move(states);
    return result("basis", std::move(out));
  }
  if (f.emit == "sectors") {
    const std::size_t top = stats == Statistics::fermion ? f.modes : basis.truncation();
    json sectors = json::array();
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= top; ++n) {
      const auto dim = sector_dimension(f.modes, n, stats);
      total += dim;
      sectors.push_back({{"particles", n}, {"dimension", dim}});
    }
    json out = header;
    out["sectors"] = std::move(sectors);
    out["total"] = total;
    out["basis_size"] = basis.size();
    return result("sectors", std::move(out));
  }
  if (f.emit == "operator") {
    need(f.mode > 0, "--mode", "fock --emit operator");
    const LadderKind kind = ladder_kind(f.ladder);
    json out = header;
    out["mode"] = f.mode;
    out["ladder"] = f.ladder;
    if (stats == Statistics::fermion) {
      out["sign"] = f.sign;
      out["operator"] = to_json(fermion_ladder(f.mode, f.modes, kind, sign_convention(f.sign)));
    } else {
      out["operator"] = to_json(boson_ladder(f.mode, f.modes, f.truncation, kind));
    }
    return result("operator", std::move(out));
  }
  // state
  need(!f.occupation.empty(), "--occupation", "fock --emit state");
  OccupationString k{parse_size_list(f.occupation, "occupation"), stats};
  if (k.modes() != f.modes) throw Usage("occupation length differs from --modes");
  const auto s = fock_state(basis, k);
  json out = header;
  out["occupation"] = k.occupations;
  out["index"] = s.index;
  out["sign"] = s.sign;
  out["amplitude"] = format_decimal(s.amplitude);
  return result("state", std::move(out));
}

// tensor --------------------------------------------------------------------

CommandResult cmd_tensor(const Flags& f) {
  json amps;
  try {
    amps = json::parse(f.amplitudes);
  } catch (const json::exception&) {
    throw Usage("--amplitudes must be a JSON array");
  }
  if (!amps.is_array()) throw Usage("--amplitudes must be a JSON array");
  const NBodyTensor psi = tensor_from_json({{"d", f.d}, {"particles", f.particles}, {"amplitudes", amps}});
  json out = {{"d", f.d}, {"particles", f.particles}, {"size", psi.size()},
              {"symmetry", to_string(classify_symmetry(psi))}};
  if (f.emit == "symmetrize") out["result"] = to_json(symmetrize(psi))["amplitudes"];
  if (f.emit == "antisymmetrize") out["result"] = to_json(antisymmetrize(psi))["amplitudes"];
  return result("tensor", std::move(out));
}

// verify --------------------------------------------------------------------

CommandResult verdict(json out) {
  const bool ok = out.at("ok").get<bool>();
  return result("report", std::move(out), ok ? Status::ok : Status::verification_failed);
}

CommandResult cmd_verify(const Flags& f) {
  const std::string& c = f.check;
  if (c == "car") {
    need(f.modes > 0, "--modes", c);
    const auto r = verify_car(f.modes, sign_convention(f.sign));
    return verdict({{"check", c}, {"modes", f.modes}, {"sign", f.sign}, {"ok", r.ok},
                    {"max_violation", r.max_violation}, {"pairs_checked", r.pairs_checked},
                    {"first_failure", optional_pair(r.first_failure)}, {"failed_relation", r.failed_relation}});
  }
  if (c == "ccr") {
    need(f.modes > 0, "--modes", c);
    const double tol = f.tol.value_or(1e-12);
    const auto r = verify_ccr(f.modes, f.truncation, tol);
    return verdict({{"check", c}, {"modes", f.modes}, {"truncation", f.truncation}, {"tol", tol}, {"ok", r.ok},
                    {"max_violation_safe", r.max_violation_safe}, {"truncation_artifact", r.truncation_artifact},
                    {"artifact_residual", r.artifact_residual}, {"safe_states", r.safe_states}});
  }
  if (c == "homomorphism") {
    need(f.n > 0, "--n", c);
    std::vector<RepKind> kinds;
    if (f.kind.empty()) {
      kinds = {RepKind::trivial, RepKind::alternating, RepKind::natural, RepKind::regular, RepKind::standard};
    } else {
      kinds = {rep_kind_from_string(f.kind)};
    }
    json results = json::array();
    bool ok = true;
    for (RepKind k : kinds) {
      if (k == RepKind::standard && f.n < 2) continue;
      const auto r = verify_homomorphism(make_rep(f.n, k));
      ok = ok && r.ok;
      results.push_back({{"kind", to_string(k)}, {"ok", r.ok}, {"identity_ok", r.identity_ok},
                         {"pairs_checked", r.pairs_checked}, {"first_failure", optional_pair(r.first_failure)}});
    }
    return verdict({{"check", c}, {"n", f.n}, {"ok", ok}, {"results", std::move(results)}});
  }
  if (c == "schur-weyl") {
    need(f.n > 0, "--n", c);
    need(f.dim > 0, "--dim", c);
    const double tol = f.tol.value_or(1e-10);
    const auto r = schur_weyl_commutation_check(f.n, f.dim, f.trials, tol, f.seed);
    return verdict({{"check", c}, {"n", f.n}, {"dim", f.dim}, {"seed", f.seed}, {"tol", tol}, {"ok", r.ok},
                    {"max_norm", r.max_norm}, {"trials", r.trials}, {"permutations", r.permutations}});
  }
  if (c == "regular-decomposition") {
    need(f.n > 0, "--n", c);
    std::vector<std::size_t> dims;
    if (f.dims.empty()) {
      for (const auto& frame : partitions(f.n)) dims.push_back(tableau_count_hook(frame));
    } else {
      dims = parse_size_list(f.dims, "dimension list");
    }
    const auto r = verify_regular_decomposition(f.n, dims);
    return verdict({{"check", c}, {"n", f.n}, {"dims", dims}, {"ok", r.ok},
                    {"group_order", r.group_order.str()}, {"sum_of_squares", r.sum_of_squares.str()},
                    {"regular_identity_character", r.regular_identity_character.str()},
                    {"character_sum", r.character_sum.str()}});
  }
  if (c == "young-idempotent") {
    std::vector<YoungTableau> tableaux;
    if (!f.tableau.empty()) {
      tableaux.push_back(parse_tableau(f.tableau));
      if (!tableaux.back().is_standard()) throw Usage("tableau " + f.tableau + " is not standard");
    } else {
      need(f.n > 0, "--n or --tableau", c);
      caps::require_at_most(f.n, caps::symmetrizer_degree, "young-idempotent degree");
      for (const auto& frame : partitions(f.n)) {
        for (const auto& t : standard_tableaux(frame)) tableaux.push_back(t);
      }
    }
    json results = json::array();
    bool ok = true;
    for (const auto& t : tableaux) {
      json r = idempotent_json(t);
      ok = ok && r.at("ok").get<bool>();
      results.push_back(std::move(r));
    }
    return verdict({{"check", c}, {"ok", ok}, {"results", std::move(results)}});
  }
  if (c == "generalized-car") {
    need(f.modes > 0, "--modes", c);
    std::vector<FermionOperator> ops;
    if (f.family == "majorana") {
      ops = majorana_ops(f.modes);
    } else if (f.family == "dirac") {
      caps::require_at_most(f.modes, caps::majorana_modes, "dirac family modes");
      ops = dirac_ops(f.modes);
    } else {
      throw Usage("unknown family \"" + f.family + "\"");
    }
    const auto r = verify_generalized_car(ops);
    return verdict({{"check", c}, {"family", f.family}, {"modes", f.modes}, {"ok", r.fermionic && r.symmetric},
                    {"fermionic", r.fermionic}, {"symmetric", r.symmetric}, {"diagonal", r.diagonal()},
                    {"s", r.s}, {"first_failure", optional_pair(r.first_failure)}, {"reason", r.reason}});
  }
  throw Usage("unknown check \"" + c + "\"");
}

void add_format(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Flags f;
  CLI::App app{"Symmetric-group representations, Young operators and Fock-space ladder algebra", "permion"};
  app.require_subcommand(1, 1);
  add_format(&app, f);

  auto* group = app.add_subcommand("group", "Elements, multiplication table or conjugacy classes of S_n");
  group->add_option("--n", f.n, "Degree")->required();
  group->add_option("--emit", f.emit, "What to print")->required()->check(CLI::IsMember({"elements", "table", "classes"}));
  add_format(group, f);

  auto* rep = app.add_subcommand("rep", "Matrices of a representation of S_n");
  rep->add_option("--n", f.n, "Degree")->required();
  rep->add_option("--kind", f.kind, "trivial, alternating, natural, regular or standard")->required();
  rep->add_option("--element", f.element, "Group element, e.g. \"(12)\" or \"(13)*(12)\"");
  rep->add_option("--ordering", f.ordering, "Regular basis order, elements separated by ';'");
  add_format(rep, f);

  auto* tableaux = app.add_subcommand("tableaux", "Standard tableaux of a Young frame");
  tableaux->add_option("--frame", f.frame, "Row lengths, e.g. 2,1")->required();
  add_format(tableaux, f);

  auto* young = app.add_subcommand("young", "Young operator of a standard tableau");
  young->add_option("--tableau", f.tableau, "Rows separated by ';', e.g. 1,2;3")->required();
  add_format(young, f);

  auto* fock = app.add_subcommand("fock", "Occupation-number bases, sectors and ladder operators");
  fock->add_option("--modes", f.modes, "Number of modes")->required();
  fock->add_option("--statistics", f.statistics, "fermion or boson");
  fock->add_option("--truncation", f.truncation, "Largest boson occupation per mode");
  fock->add_option("--emit", f.emit, "What to print")->required()->check(CLI::IsMember({"basis", "sectors", "operator", "state"}));
  fock->add_option("--mode", f.mode, "1-based mode for --emit operator");
  fock->add_option("--ladder", f.ladder, "create or annihilate");
  fock->add_option("--sign", f.sign, "jordan-wigner or none");
  fock->add_option("--occupation", f.occupation, "Occupations for --emit state, e.g. 1,0,1");
  add_format(fock, f);

  auto* tensor = app.add_subcommand("tensor", "Exchange symmetry of a first-quantized tensor");
  tensor->add_option("--d", f.d, "Single-particle dimension")->required();
  tensor->add_option("--particles", f.particles, "Particle count")->required();
  tensor->add_option("--amplitudes", f.amplitudes, "JSON array of d^N amplitudes, row-major")->required();
  tensor->add_option("--emit", f.emit, "classify, symmetrize or antisymmetrize")
      ->check(CLI::IsMember({"classify", "symmetrize", "antisymmetrize"}));
  add_format(tensor, f);

  auto* verify = app.add_subcommand("verify", "Run an algebraic check; exit 1 on violations");
  verify->add_option("--check", f.check, "Check to run")
      ->required()
      ->check(CLI::IsMember({"car", "ccr", "homomorphism", "schur-weyl", "regular-decomposition", "young-idempotent",
                             "generalized-car"}));
  verify->add_option("--n", f.n, "Degree");
  verify->add_option("--kind", f.kind, "Representation kind (homomorphism; default all)");
  verify->add_option("--modes", f.modes, "Number of modes (car, ccr, generalized-car)");
  verify->add_option("--truncation", f.truncation, "Boson truncation (ccr)");
  verify->add_option("--sign", f.sign, "jordan-wigner or none (car)");
  verify->add_option("--dim", f.dim, "Local dimension (schur-weyl)");
  verify->add_option("--trials", f.trials, "Random unitaries (schur-weyl)");
  verify->add_option("--seed", f.seed, "Random seed (schur-weyl)");
  verify->add_option("--tol", f.tol, "Tolerance (ccr, schur-weyl)");
  verify->add_option("--dims", f.dims, "Irrep dimensions (regular-decomposition; default from tableaux)");
  verify->add_option("--tableau", f.tableau, "Single tableau (young-idempotent)");
  verify->add_option("--family", f.family, "majorana or dirac (generalized-car)");
  add_format(verify, f);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("permion");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  auto parsed_sub = [&]() -> CLI::App* {
    for (auto* s : app.get_subcommands()) return s;
    return nullptr;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    CommandResult r = result("help", (parsed_sub() ? parsed_sub() : &app)->help());
    return r;
  } catch (const CLI::ParseError& e) {
    CommandResult r = result("error", nullptr, Status::usage_error);
    r.diagnostics = std::string("error: ") + e.what() + "\n\n" + (parsed_sub() ? parsed_sub() : &app)->help();
    return r;
  }

  CommandResult r;
  try {
    if (group->parsed()) {
      r = cmd_group(f);
    } else if (rep->parsed()) {
      r = cmd_rep(f);
    } else if (tableaux->parsed()) {
      r = cmd_tableaux(f);
    } else if (young->parsed()) {
      r = cmd_young(f);
    } else if (fock->parsed()) {
      r = cmd_fock(f);
    } else if (tensor->parsed()) {
      r = cmd_tensor(f);
    } else {
      r = cmd_verify(f);
    }
  } catch (const verification_error& e) {
    r = result("error", nullptr, Status::verification_failed);
    r.diagnostics = std::string("verification failed: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    // Library errors here come from flag values: unparsable cycles, caps.
    r = result("error", nullptr, Status::usage_error);
    r.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  r.format = f.format == "text" ? OutputFormat::text : OutputFormat::json;
  return r;
}

// Text rendering ------------------------------------------------------------

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void matrix_text(std::ostringstream& os, const json& m, const std::string& indent) {
  std::size_t width = 1;
  for (const auto& row : m.at("entries")) {
    for (const auto& e : row) width = std::max(width, e.get<std::string>().size());
  }
  for (const auto& row : m.at("entries")) {
    os << indent;
    bool first = true;
    for (const auto& e : row) {
      if (!first) os << ' ';
      os << pad_left(e.get<std::string>(), width);
      first = false;
    }
    os << '\n';
  }
}

void generic_text(std::ostringstream& os, const json& j) {
  if (!j.is_object()) {
    os << scalar_text(j) << '\n';
    return;
  }
  for (const auto& [key, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << key << ":\n";
      for (const auto& item : v) {
        os << " ";
        for (const auto& [k2, v2] : item.items()) os << ' ' << k2 << '=' << scalar_text(v2);
        os << '\n';
      }
    } else {
      os << key << ": " << scalar_text(v) << '\n';
    }
  }
}

}  // namespace

std::string render(const CommandResult& r, OutputFormat format) {
  if (r.kind == "help") return r.payload.get<std::string>();
  if (r.payload.is_null()) return {};
  if (format == OutputFormat::json) return r.payload.dump() + "\n";

  std::ostringstream os;
  const json& p = r.payload;
  if (r.kind == "elements") {
    for (const auto& e : p) os << e.get<std::string>() << '\n';
  } else if (r.kind == "table") {
    std::size_t width = 1;
    for (const auto& e : p.at("elements")) width = std::max(width, e.get<std::string>().size());
    os << pad_left("*", width) << " |";
    for (const auto& e : p.at("elements")) os << ' ' << pad_left(e.get<std::string>(), width);
    os << '\n' << std::string(width, '-') << "-+" << std::string((width + 1) * p.at("elements").size(), '-') << '\n';
    for (std::size_t i = 0; i < p.at("table").size(); ++i) {
      os << pad_left(p.at("elements")[i].get<std::string>(), width) << " |";
      for (const auto& e : p.at("table")[i]) os << ' ' << pad_left(e.get<std::string>(), width);
      os << '\n';
    }
  } else if (r.kind == "classes") {
    for (const auto& c : p) {
      os << c.at("cycle_type").get<std::string>() << " (" << c.at("size") << "):";
      for (const auto& e : c.at("elements")) os << ' ' << e.get<std::string>();
      os << '\n';
    }
  } else if (r.kind == "matrix") {
    os << "D^" << p.at("element").get<std::string>() << "(" << p.at("kind").get<std::string>() << ")\n";
    matrix_text(os, p.at("matrix"), "  ");
  } else if (r.kind == "representation") {
    for (const auto& [label, m] : p.at("matrices").items()) {
      os << label << ":\n";
      matrix_text(os, m, "  ");
    }
  } else if (r.kind == "tableaux") {
    os << "frame " << p.at("frame").get<std::string>() << ", " << p.at("count") << " standard tableaux\n";
    for (const auto& t : p.at("tableaux")) {
      os << '\n';
      for (const auto& row : t) {
        bool first = true;
        for (const auto& v : row) {
          os << (first ? "" : " ") << v;
          first = false;
        }
        os << '\n';
      }
    }
  } else if (r.kind == "basis") {
    for (std::size_t i = 0; i < p.at("states").size(); ++i) {
      os << i << " |";
      for (const auto& k : p.at("states")[i]) os << k.get<std::size_t>();
      os << ">\n";
    }
  } else if (r.kind == "young") {
    os << "tableau " << p.at("tableau").get<std::string>() << '\n';
    os << "operator:";
    bool first = true;
    for (const auto& [cyc, c] : p.at("operator").at("terms").items()) {
      std::string coeff = c.get<std::string>();
      const bool negative = coeff.front() == '-';
      if (negative) coeff.erase(0, 1);
      os << ' ' << (negative ? "-" : first ? "" : "+") << (first && !negative ? "" : " ");
      os << (coeff == "1" ? "" : coeff + "*") << cyc;
      first = false;
    }
    os << "\nE*E = c*E: " << (p.at("proportional").get<bool>() ? "yes" : "no");
    if (!p.at("constant").is_null()) os << ", c = " << p.at("constant").get<std::string>();
    os << '\n';
  } else {
    generic_text(os, p);
  }
  return os.str();
}

}  // namespace permion::cli
