#include "kdp/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "kdp/abelian_image.hpp"
#include "kdp/amalgam_splitting.hpp"
#include "kdp/certificates.hpp"
#include "kdp/error.hpp"
#include "kdp/json_io.hpp"
#include "kdp/kernel_groups.hpp"
#include "kdp/presentation_area.hpp"
#include "kdp/subgroup_metrics.hpp"

namespace kdp {

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  std::int64_t node_cap = 4'000'000;
  int len_cap_factor = 4;
  int radius = 9;
  int jobs = 1;
  std::string format = "table";

  SearchBudget search() const {
    SearchBudget b;
    b.node_cap = node_cap;
    b.length_cap_factor = len_cap_factor;
    return b;
  }
};

struct Report {
  Json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  int exit = kExitVerified;
};

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? "\"\"" : std::string(1, c);
  }
  return out + "\"";
}

void render(Report const& r, std::string const& format, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      out << (i ? "," : "") << csv_field(r.columns[i]);
    }
    out << '\n';
    for (auto const& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_field(row[i]);
      }
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    width[i] = r.columns[i].size();
    for (auto const& row : r.rows) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](std::vector<std::string> const& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i + 1 < cells.size()) {
        s += cells[i] + std::string(width[i] - cells[i].size() + 2, ' ');
      } else {
        s += cells[i];
      }
    }
    out << s << '\n';
  };
  line(r.columns);
  for (auto const& row : r.rows) {
    line(row);
  }
}

std::string str(long v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

// 1-based line/column of a byte offset.
ParseError parse_error_at(std::string_view text, std::size_t offset,
                          std::string const& message) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return ParseError(message, line, col);
}

Json parse_json(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    auto offset = e.byte > 0 ? e.byte - 1 : 0;
    throw parse_error_at(text, offset, "malformed JSON");
  }
}

// "w1 | w2", {"factors": [...]} or h(n).
ProductElement parse_element(std::string const& text, ProductGroup const& g) {
  static std::regex const h_sugar(R"(\s*h\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, h_sugar)) {
    if (g.factors() != 2 || g.rank() != 2) {
      throw DomainError("h(n) lives in F2 x F2");
    }
    return h_family(std::stoi(m[1].str()));
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto j = parse_json(text);
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) {
      throw DomainError("element JSON needs a \"factors\" array");
    }
    std::string joined;
    for (std::size_t i = 0; i < j["factors"].size(); ++i) {
      if (!j["factors"][i].is_string()) {
        throw DomainError("element factors must be strings");
      }
      joined += (i ? " | " : "") + j["factors"][i].get<std::string>();
    }
    return parse_product_element(joined, g);
  }
  return parse_product_element(text, g);
}

std::string format_element(ProductElement const& g, int rank) {
  return to_string(g, rank);
}

Json element_json(ProductElement const& g, int rank) {
  auto alphabet = Alphabet::standard(rank);
  Json factors = Json::array();
  for (auto const& w : g.factors) {
    factors.push_back(to_string(w, alphabet));
  }
  return Json{{"factors", factors}};
}

// A presentation with its optional projections.
struct LoadedPresentation {
  Presentation p;
  std::optional<std::vector<AreaProjection>> projections;
};

LoadedPresentation load_presentation(std::string const& text,
                                     std::string const& oracle) {
  if (text == "toy") {
    auto sc = toy_scenario(1);
    return {sc.presentation, sc.projections};
  }
  LoadedPresentation lp{Presentation::parse(text), std::nullopt};
  if (oracle == "abelian") {
    int r = lp.p.rank();
    std::vector<AbelianVector> images;
    for (int i = 0; i < r; ++i) {
      images.push_back(AbelianVector::unit(static_cast<std::size_t>(r),
                                           static_cast<std::size_t>(i)));
    }
    lp.p.attach_evaluation(Evaluation(AbelianEvaluation{r, std::move(images)}));
  } else if (!oracle.empty() && oracle != "none") {
    throw DomainError("unknown oracle '" + oracle + "'");
  }
  return lp;
}

// ---------------------------------------------------------------------------
// Subcommands

Report cmd_member(std::string const& group, std::string const& element) {
  auto g = KernelGroup::parse(group);
  auto e = parse_element(element, g.ambient());
  auto theta = g.theta(e);
  bool in = theta.is_zero();
  Report r;
  r.json = Json{{"group", g.name()},
                {"element", element_json(e, g.m())},
                {"theta", theta.coords()},
                {"member", in}};
  r.columns = {"group", "element", "theta", "member"};
  r.rows = {{g.name(), format_element(e, g.m()), to_string(theta), str(in)}};
  r.exit = in ? kExitVerified : kExitFailure;
  return r;
}

Report cmd_rewrite(std::string const& group, std::string const& element,
                   int random_length, RunConfig const& cfg) {
  auto g = KernelGroup::parse(group);
  ProductElement e = random_length > 0
                         ? random_kernel_element(g, random_length, cfg.seed)
                         : parse_element(element, g.ambient());
  auto gens = standard_generators(g);
  auto word = rewrite_in_generators(g, e);
  bool ok = gens.eval(word) == e;
  Report r;
  r.json = Json{{"group", g.name()},
                {"element", element_json(e, g.m())},
                {"word", gens.to_string(word)},
                {"length", word.size()},
                {"verified", ok}};
  r.columns = {"group", "element", "word", "length", "verified"};
  r.rows = {{g.name(), format_element(e, g.m()), gens.to_string(word),
             str(static_cast<long>(word.size())), str(ok)}};
  r.exit = ok ? kExitVerified : kExitFailure;
  return r;
}

FactorHom parse_matrix(std::string const& text) {
  auto j = parse_json(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("r") ||
      !j.contains("rows") || !j["rows"].is_array()) {
    throw DomainError("matrix JSON needs m, r and rows");
  }
  int m = j["m"].get<int>();
  int r = j["r"].get<int>();
  if (m < 1 || r < 0 || static_cast<int>(j["rows"].size()) != m) {
    throw DomainError("matrix needs m >= 1 rows");
  }
  std::vector<AbelianVector> images;
  for (auto const& row : j["rows"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != r) {
      throw DomainError("each row needs r entries");
    }
    images.emplace_back(row.get<std::vector<std::int64_t>>());
  }
  return FactorHom(m, r, std::move(images));
}

Report cmd_normalize(std::string const& matrix) {
  auto h = parse_matrix(matrix);
  auto change = normalize_basis(h);
  auto composed = compose(h, change.new_basis);
  bool ok = composed.is_standard();
  auto alphabet = Alphabet::standard(h.rank());
  Report r;
  r.json = to_json(change, h);
  r.json["standard"] = ok;
  r.columns = {"generator", "new_basis", "image", "inverse_basis"};
  for (int i = 0; i < h.rank(); ++i) {
    auto idx = static_cast<std::size_t>(i);
    r.rows.push_back({alphabet.name(i + 1),
                      to_string(change.new_basis[idx], alphabet),
                      to_string(ab_image(h, change.new_basis[idx])),
                      to_string(change.inverse_basis[idx], alphabet)});
  }
  r.exit = ok ? kExitVerified : kExitFailure;
  return r;
}

Report cmd_split(int n, int m, std::string const& element) {
  SplittingData d(n, m);
  auto e = parse_element(element, d.whole().ambient());
  auto parts = semidirect_decompose(d, e);
  auto form = syllable_form(d, e);
  auto const& amb = d.whole().ambient();
  bool ok = amb.mul(parts.m_part, d.hat_generators().eval(parts.hat_word)) == e;
  std::string blocks;
  for (auto const& b : form.blocks) {
    blocks += (blocks.empty() ? "" : " ") + std::string("g") + std::to_string(b.k) +
              "^" + std::to_string(b.exponent);
  }
  Report r;
  r.json = to_json(form, d);
  r.json["hat_word"] = d.hat_generators().to_string(parts.hat_word);
  r.json["reassembles"] = ok;
  r.columns = {"group", "m_part", "blocks", "reassembles"};
  r.rows = {{d.whole().name(), format_element(form.m_part, m),
             blocks.empty() ? "1" : blocks, str(ok)}};
  r.exit = ok ? kExitVerified : kExitFailure;
  return r;
}

Report cmd_area(std::string const& presentation, std::string const& word,
                std::string const& oracle, bool plain, RunConfig const& cfg) {
  auto lp = load_presentation(presentation, oracle);
  auto w = lp.p.parse_word(word);
  auto budget = cfg.search();
  budget.plain = plain;
  budget.projections = lp.projections;
  auto res = area_search(lp.p, w, budget);
  bool exact = res.status == AreaResult::Status::exact;
  Report r;
  r.json = Json{{"presentation", lp.p.to_string()}, {"word", lp.p.format(w)}};
  r.json["result"] = to_json(res, lp.p);
  r.columns = {"word", "status", "area", "lower_bound", "nodes",
               "cap_independent"};
  r.rows = {{lp.p.format(w), exact ? "exact" : "exhausted",
             exact ? str(static_cast<long>(res.area)) : "",
             str(static_cast<long>(res.lower_bound)), str(static_cast<long>(res.nodes)),
             str(res.cap_independent())}};
  r.exit = exact ? kExitVerified : kExitInconclusive;
  return r;
}

Report cmd_dehn(std::string const& presentation, int n,
                std::string const& oracle, RunConfig const& cfg) {
  auto lp = load_presentation(presentation, oracle);
  auto budget = cfg.search();
  budget.projections = lp.projections;
  auto res = dehn_function(lp.p, n, budget, cfg.jobs);
  Report r;
  r.json = Json{{"presentation", lp.p.to_string()}};
  r.json["result"] = to_json(res, lp.p);
  r.columns = {"n", "value", "exact", "witness", "words_checked"};
  r.rows = {{str(static_cast<long>(n)), str(static_cast<long>(res.value)),
             str(res.exact), lp.p.format(res.witness),
             str(static_cast<long>(res.words_checked))}};
  r.exit = res.exact ? kExitVerified : kExitInconclusive;
  return r;
}

Report cmd_metric(std::string const& group, std::string const& target,
                  RunConfig const& cfg) {
  auto g = KernelGroup::parse(group);
  auto e = parse_element(target, g.ambient());
  if (!g.contains(e)) {
    throw DomainError("target is not in " + g.name());
  }
  auto gens = standard_generators(g);
  auto d = distance(gens, e, cfg.radius);
  Report r;
  r.json = Json{{"group", g.name()}, {"target", element_json(e, g.m())}};
  r.json["distance"] = to_json(d);
  r.columns = {"group", "target", "status", "value", "radius"};
  r.rows = {{g.name(), format_element(e, g.m()),
             d.found ? "exact" : "greater_than",
             str(static_cast<long>(d.found ? d.distance : d.radius)),
             str(static_cast<long>(d.radius))}};
  r.exit = d.found ? kExitVerified : kExitInconclusive;
  return r;
}

Report cmd_distortion(int from, int to, RunConfig const& cfg) {
  auto rows = distortion_table(from, to, cfg.radius);
  Report r;
  r.json = Json{{"group", "K2_2_2"}, {"radius", cfg.radius}};
  Json arr = Json::array();
  r.columns = {"n", "ambient_length", "status", "value"};
  for (auto const& row : rows) {
    arr.push_back(to_json(row));
    r.rows.push_back({str(static_cast<long>(row.n)), str(row.ambient_length),
                      row.exact ? "exact" : "greater_than",
                      str(static_cast<long>(row.value))});
  }
  r.json["rows"] = arr;
  return r;
}

Report cmd_certify(int n, RunConfig const& cfg) {
  CertifyBudget budget;
  budget.search = cfg.search();
  budget.radius = cfg.radius;
  auto rep = lower_bound_report(n, budget);
  Report r;
  r.json = to_json(rep);
  long passed = static_cast<long>(std::count_if(
      rep.evidence.begin(), rep.evidence.end(),
      [](Evidence const& e) { return e.passed; }));
  r.columns = {"n",          "status",         "test_word_length",
               "stated_length", "distance_lower_bound", "area_lower_bound",
               "evidence_passed"};
  r.rows = {{str(static_cast<long>(n)), rep.conclusive ? "certified" : "inconclusive",
             str(static_cast<long>(rep.computed_length)),
             str(static_cast<long>(rep.stated_length)),
             str(static_cast<long>(rep.distance_lower_bound)),
             str(static_cast<long>(rep.area_lower_bound)),
             str(passed) + "/" + str(static_cast<long>(rep.evidence.size()))}};
  r.exit = rep.conclusive ? kExitVerified : kExitInconclusive;
  return r;
}

Report cmd_toy(int k, int n, bool plain, RunConfig const& cfg) {
  auto budget = cfg.search();
  budget.plain = plain;
  auto rep = toy_amalgam_check(k, n, budget);
  auto sc = toy_scenario(k);
  Report r;
  r.json = to_json(rep, sc.presentation);
  bool exact = rep.area.status == AreaResult::Status::exact;
  char const* verdict = rep.verdict == ToyReport::Verdict::holds      ? "holds"
                        : rep.verdict == ToyReport::Verdict::violated ? "violated"
                                                                      : "inconclusive";
  r.columns = {"k", "n", "word_length", "subgroup_distance", "bound", "status",
               "area", "lower_bound", "verdict"};
  r.rows = {{str(static_cast<long>(k)), str(static_cast<long>(n)),
             str(static_cast<long>(rep.word_length)),
             str(static_cast<long>(rep.subgroup_distance)),
             str(static_cast<long>(rep.bound)), exact ? "exact" : "exhausted",
             exact ? str(static_cast<long>(rep.area.area)) : "",
             str(static_cast<long>(rep.area.lower_bound)), verdict}};
  r.exit = rep.verdict == ToyReport::Verdict::holds      ? kExitVerified
           : rep.verdict == ToyReport::Verdict::violated ? kExitFailure
                                                         : kExitInconclusive;
  return r;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Experiments on kernels of maps from products of free groups"};
  app.name("kdp");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for random inputs");
  app.add_option("--node-cap", cfg.node_cap, "Area search node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--len-cap-factor", cfg.len_cap_factor,
                 "Word length cap: |w| + c * (max relator length)")
      ->check(CLI::PositiveNumber);
  app.add_option("--radius", cfg.radius, "Breadth-first search radius")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  std::string group;
  std::string element;
  std::string presentation;
  std::string word;
  std::string oracle;
  std::string matrix;
  int n = 0;
  int m = 2;
  int k = 1;
  int from = 1;
  int to = 3;
  int random_length = 0;
  bool plain = false;
  std::function<Report()> action;

  auto* member = app.add_subcommand("member", "Test membership in K^n_m(r)");
  member->add_option("--group", group, "Group name, e.g. K2_2_2")->required();
  member->add_option("--element", element, "Element of the product")->required();
  member->callback([&] { action = [&] { return cmd_member(group, element); }; });

  auto* rewrite = app.add_subcommand(
      "rewrite", "Write a kernel element over the standard generators");
  rewrite->add_option("--group", group)->required();
  auto* elem_opt = rewrite->add_option("--element", element);
  auto* rand_opt = rewrite->add_option(
      "--random", random_length, "Rewrite a random element of this length")
      ->check(CLI::PositiveNumber);
  elem_opt->excludes(rand_opt);
  rewrite->callback([&] {
    action = [&] {
      if (element.empty() && random_length == 0) {
        throw DomainError("rewrite needs --element or --random");
      }
      return cmd_rewrite(group, element, random_length, cfg);
    };
  });

  auto* normalize = app.add_subcommand(
      "normalize-basis", "Nielsen moves taking a factor map to standard form");
  normalize->add_option("--matrix", matrix,
                        R"(JSON {"m":..,"r":..,"rows":[[..],..]})")
      ->required();
  normalize->callback([&] { action = [&] { return cmd_normalize(matrix); }; });

  auto* split = app.add_subcommand(
      "split", "Decompose an element of K^n_m(m) along the amalgam");
  split->add_option("--n", n, "Number of factors")->required();
  split->add_option("--m", m, "Rank of each factor");
  split->add_option("--element", element)->required();
  split->callback([&] { action = [&] { return cmd_split(n, m, element); }; });

  auto* area = app.add_subcommand("area", "Exact area of a null-homotopic word");
  area->add_option("--presentation", presentation,
                   "Presentation text, or 'toy'")
      ->required();
  area->add_option("--word", word)->required();
  area->add_option("--oracle", oracle, "Word problem oracle: abelian or none");
  area->add_flag("--plain", plain, "Uniform-cost order without area bound");
  area->callback([&] {
    action = [&] { return cmd_area(presentation, word, oracle, plain, cfg); };
  });

  auto* dehn = app.add_subcommand("dehn", "Dehn function value by enumeration");
  dehn->add_option("--presentation", presentation)->required();
  dehn->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  dehn->add_option("--oracle", oracle)->required();
  dehn->callback([&] {
    action = [&] { return cmd_dehn(presentation, n, oracle, cfg); };
  });

  auto* metric = app.add_subcommand(
      "metric", "Word metric distance over the standard generators");
  metric->add_option("--group", group)->required();
  metric->add_option("--target", element)->required();
  metric->callback([&] { action = [&] { return cmd_metric(group, element, cfg); }; });

  auto* distortion = app.add_subcommand(
      "distortion", "d_B(1, h(n)) against ambient length in K2_2_2");
  distortion->add_option("--from", from)->check(CLI::PositiveNumber);
  distortion->add_option("--to", to)->check(CLI::PositiveNumber);
  distortion->callback([&] { action = [&] { return cmd_distortion(from, to, cfg); }; });

  auto* certify = app.add_subcommand("certify", "Area lower-bound certificate");
  certify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  certify->callback([&] { action = [&] { return cmd_certify(n, cfg); }; });

  auto* toy = app.add_subcommand("toy-amalgam",
                                 "Brute-force area inequality on the toy amalgam");
  toy->add_option("--k", k)->check(CLI::PositiveNumber);
  toy->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  toy->add_flag("--plain", plain, "Uniform-cost order without area bound");
  toy->callback([&] { action = [&] { return cmd_toy(k, n, plain, cfg); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitVerified;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitVerified;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  try {
    Report r = action();
    render(r, cfg.format, out);
    return r.exit;
  } catch (ParseError const& e) {
    err << e.what() << '\n';
  } catch (VerificationError const& e) {
    err << "verification failed: " << e.what()
        << '\n';
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
  } catch (nlohmann::json::exception const& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitFailure;
}

}  // namespace kdp
