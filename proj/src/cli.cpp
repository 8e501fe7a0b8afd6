#include "polyo/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "polyo/bijections.hpp"
#include "polyo/enumerators.hpp"
#include "polyo/json_io.hpp"
#include "polyo/oracle_checks.hpp"
#include "polyo/selftest.hpp"
#include "polyo/statistics.hpp"

namespace polyo::cli {

namespace {

// Thrown for bad parameter combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw UsageError("unknown format: " + s);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
    if (used != item.size()) throw UsageError("not an integer list: " + text);
    out.push_back(v);
  }
  return out;
}

// Inline JSON if it looks like JSON, otherwise a file path.
Json read_input(const std::string& in) {
  const auto first = in.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (in[first] == '{' || in[first] == '[')) return Json::parse(in);
  std::ifstream file(in);
  if (!file) throw UsageError("cannot read input file: " + in);
  return Json::parse(file);
}

template <class T>
void require_valid(const T& object) {
  const auto problems = validate(object);
  if (!problems.empty()) throw InvalidObject(problems.front());
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    const bool quote = cells[i].find_first_of(",\"\n ") != std::string::npos;
    if (!quote) {
      out += cells[i];
      continue;
    }
    out += '"';
    for (char c : cells[i]) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    out += '"';
  }
  return out + "\n";
}

std::string join_ints(const std::vector<int>& v, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

// ---- statistics of single objects

Json polyomino_stats(const DecoratedPolyomino& p) {
  const AreaWord w = to_area_word(p.base);
  Json j;
  j["area"] = area(w);
  j["area_dec"] = area_dec(w, p.rise_decorations);
  j["dinv"] = dinv(w);
  j["bounce"] = bounce(p.base);
  j["bounce_dec"] = bounce_dec(p.base, p.valley_decorations);
  j["s_bullet"] = zero_count_bullet(p.base) + 1;
  j["s_star"] = zero_count_star(w);
  j["area_word"] = to_string(w);
  return j;
}

Json labelled_stats(const LabelledPolyomino& p) {
  Json j = polyomino_stats(DecoratedPolyomino{p.base, {}, {}});
  j["pmaj"] = polyomino_pmaj(p);
  j["labelled_dinv"] = polyomino_dinv(p);
  return j;
}

Json pldp_stats(const PartiallyLabelledDyckPath& p) {
  return Json{{"dinv", pldp_dinv(p)}, {"underlined_area", underlined_area(p)}, {"pmaj", pmaj(p)}, {"blanks", p.blanks()}};
}

Json pf2_stats_json(const TwoCarParkingFunction& f) {
  const auto st = pf2_stats(f);
  return Json{{"dinv", st.dinv},
              {"underlined_area", st.underlined_area},
              {"ones", f.ones()},
              {"twos", f.twos()},
              {"diagonal_twos", diagonal_twos(f)},
              {"s", diagonal_twos(f) + 1}};
}

bool looks_like_pf2(const Json& j) {
  if (!j.contains("labels") || !j.at("labels").is_array()) return false;
  for (const auto& l : j.at("labels"))
    if (!l.is_number_integer() || (l.get<int>() != 1 && l.get<int>() != 2)) return false;
  return true;
}

std::string detect_object(const Json& j) {
  if (!j.is_object()) throw InvalidObject("input must be a JSON object");
  if (j.contains("red")) return j.contains("labels") ? "labelled" : "polyomino";
  if (j.contains("path")) return looks_like_pf2(j) ? "pf2" : "pldp";
  throw InvalidObject("cannot tell the object kind; expected \"red\"/\"green\" or \"path\"");
}

Json stats_of(const Json& j, std::string kind) {
  if (kind == "auto") kind = detect_object(j);
  if (kind == "polyomino") {
    const auto p = decorated_from_json(j);
    require_valid(p);
    return polyomino_stats(p);
  }
  if (kind == "labelled") {
    const auto p = labelled_from_json(j);
    require_valid(p);
    return labelled_stats(p);
  }
  if (kind == "pldp") {
    const auto p = pldp_from_json(j);
    require_valid(p);
    return pldp_stats(p);
  }
  if (kind == "pf2") {
    const auto f = pf2_from_json(j);
    require_valid(f);
    return pf2_stats_json(f);
  }
  throw UsageError("unknown object kind: " + kind);
}

// ---- output helpers

std::string render_stats(const Json& stats, Format format) {
  if (format == Format::json) return stats.dump(2) + "\n";
  if (format == Format::csv) {
    std::vector<std::string> keys, values;
    for (const auto& [k, v] : stats.items()) {
      keys.push_back(k);
      values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return csv_row(keys) + csv_row(values);
  }
  std::string out;
  for (const auto& [k, v] : stats.items()) out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

std::string render_polynomial(const Json& query, const QTPolynomial& p, Format format) {
  const std::string text = p.to_string();
  if (format == Format::text) return text + "\n";
  if (format == Format::csv) {
    const auto get = [&](const char* key) { return query.contains(key) && !query.at(key).is_null() ? query.at(key).dump() : ""; };
    return csv_row({"m", "n", "k", "s", "polynomial"}) + csv_row({get("m"), get("n"), get("k"), get("s"), text});
  }
  return Json{{"query", query}, {"polynomial", json_of(p)}, {"text", text}}.dump(2) + "\n";
}

std::string render_report(const CheckReport& report, Format format) {
  if (format == Format::json) return report.to_json().dump(2) + "\n";
  const std::string first = report.failures.empty() ? "" : report.failures.front();
  if (format == Format::csv)
    return csv_row({"check", "equal", "checked", "failures", "first_failure"}) +
           csv_row({report.name, report.equal() ? "true" : "false", std::to_string(report.checked.size()),
                    std::to_string(report.failures.size()), first});
  std::string out = report.name + ": " + (report.equal() ? "equal" : "NOT EQUAL") + " (" +
                    std::to_string(report.checked.size()) + " checked, " + std::to_string(report.failures.size()) +
                    " failures)\n";
  if (!report.equal()) out += "first failure: " + first + "\ncounterexample: " + report.counterexample.dump() + "\n";
  return out;
}

void merge(CheckReport& into, const CheckReport& from) {
  for (const auto& c : from.checked) into.checked.push_back(c);
  for (std::size_t i = 0; i < from.failures.size(); ++i)
    into.fail(from.failures[i], i == 0 ? from.counterexample : Json());
}

// ---- the application

struct Settings {
  std::string format;
  std::string out_path;
  std::uint64_t seed = 1;
};

struct EnumerateArgs {
  std::string kind = "plain", content;
  int m = 1, n = 1, k = 0;
};

struct ObjectArgs {
  std::string in, object = "auto", bijection;
};

struct EnumeratorArgs {
  std::string family = "rp-bullet", stats, content;
  int m = 1, n = 1, k = 0;
  std::optional<int> s;
};

struct RecursionArgs {
  int m = 1, n = 1, s = 1, k = 0;
  bool printed = false;
};

struct VerifyArgs {
  std::string check, indexing = "corrected";
  int m = 1, n = 1, k = 0, points = 3;
  std::optional<int> r;
  bool printed_initial = false;
};

struct SelftestArgs {
  bool json = false;
  std::string corrupt;
};

struct Outcome {
  std::string text;
  int code = 0;
};

Outcome do_enumerate(const EnumerateArgs& a, Format format) {
  if (a.m < 0 || a.n < 0 || a.k < 0) throw UsageError("sizes must be non-negative");
  std::vector<Json> objects;
  if (a.kind == "plain") {
    for (const auto& p : enumerate_plain(a.m, a.n)) objects.push_back(json_of(p));
  } else if (a.kind == "bullet" || a.kind == "star") {
    const auto kind = a.kind == "bullet" ? DecorationKind::bullet : DecorationKind::star;
    for (const auto& p : enumerate_decorated(a.m, a.n, a.k, kind)) objects.push_back(json_of(p));
  } else if (a.kind == "labelled") {
    for (const auto& p : enumerate_labelled(a.m, a.n, parse_int_list(a.content))) objects.push_back(json_of(p));
  } else if (a.kind == "pf2") {
    for (const auto& f : enumerate_pf2(a.m, a.n, a.k)) objects.push_back(json_of(f));
  } else if (a.kind == "pldp") {
    for (const auto& p : enumerate_pldp(a.m, a.n, a.k, parse_int_list(a.content))) objects.push_back(json_of(p));
  } else {
    throw UsageError("unknown kind: " + a.kind);
  }
  std::string out;
  if (format == Format::json) {
    out = Json(objects).dump(2) + "\n";
  } else if (format == Format::text) {
    for (const auto& o : objects) out += o.dump() + "\n";
  } else if (a.kind == "pf2" || a.kind == "pldp") {
    out = csv_row({"path", "labels", "dec_rises"});
    for (const auto& o : objects)
      out += csv_row({o.at("path").get<std::string>(), join_ints(o.at("labels").get<std::vector<int>>()),
                      join_ints(o.at("dec_rises").get<std::vector<int>>())});
  } else {
    out = csv_row({"m", "n", "red", "green", "rise_dec", "valley_dec", "labels"});
    for (const auto& o : objects) {
      const auto list = [&](const char* key) { return o.contains(key) ? join_ints(o.at(key).get<std::vector<int>>()) : ""; };
      out += csv_row({o.at("m").dump(), o.at("n").dump(), o.at("red").get<std::string>(), o.at("green").get<std::string>(),
                      list("rise_dec"), list("valley_dec"), o.contains("labels") ? o.at("labels").dump() : ""});
    }
  }
  return {out, 0};
}

Outcome do_map(const ObjectArgs& a, Format format) {
  const Json input = read_input(a.in);
  Json result{{"bijection", a.bijection}, {"source", input}};
  const std::string& b = a.bijection;
  if (b == "zeta" || b == "zeta-inv") {
    const auto p = decorated_from_json(input);
    require_valid(p);
    const auto image = b == "zeta" ? zeta(p) : zeta_inverse(p);
    result["image"] = json_of(image);
    result["source_stats"] = polyomino_stats(p);
    result["image_stats"] = polyomino_stats(image);
  } else if (b == "pf2") {
    const auto f = pf2_from_json(input);
    require_valid(f);
    const auto image = pf2_to_polyomino(f);
    result["image"] = json_of(image);
    result["source_stats"] = pf2_stats_json(f);
    result["image_stats"] = polyomino_stats(image);
  } else if (b == "pf2-inv") {
    const auto p = decorated_from_json(input);
    require_valid(p);
    const auto image = pf2_from_polyomino(p);
    result["image"] = json_of(image);
    result["source_stats"] = polyomino_stats(p);
    result["image_stats"] = pf2_stats_json(image);
  } else if (b == "pldp") {
    const auto p = pldp_from_json(input);
    require_valid(p);
    const auto image = pldp_to_labelled_polyomino(p);
    result["image"] = json_of(image);
    result["source_stats"] = pldp_stats(p);
    result["image_stats"] = labelled_stats(image);
  } else if (b == "pldp-inv") {
    const auto q = labelled_from_json(input);
    require_valid(q);
    const auto image = pldp_from_labelled_polyomino(q);
    result["image"] = json_of(image);
    result["source_stats"] = labelled_stats(q);
    result["image_stats"] = pldp_stats(image);
  } else {
    throw UsageError("unknown bijection: " + b);
  }
  if (format == Format::csv) throw UsageError("map supports json and text output only");
  if (format == Format::text)
    return {"image: " + result["image"].dump() + "\nsource_stats: " + result["source_stats"].dump() +
                "\nimage_stats: " + result["image_stats"].dump() + "\n",
            0};
  return {result.dump(2) + "\n", 0};
}

Outcome do_enumerator(const EnumeratorArgs& a, Format format) {
  EnumeratorQuery q;
  q.family = parse_family(a.family);
  q.stats = a.stats.empty() ? default_stat_pair(q.family) : parse_stat_pair(a.stats);
  q.m = a.m;
  q.n = a.n;
  q.k = a.k;
  q.s = a.s;
  q.content = parse_int_list(a.content);
  const QTPolynomial p = brute_enumerator(q);
  Json query{{"family", to_string(q.family)}, {"stats", to_string(q.stats)}, {"m", q.m}, {"n", q.n}, {"k", q.k}};
  query["s"] = q.s ? Json(*q.s) : Json();
  if (!q.content.empty()) query["content"] = q.content;
  return {render_polynomial(query, p, format), 0};
}

Outcome do_recursion(const RecursionArgs& a, Format format) {
  BounceRecursion rec(BounceRecursion::Options{a.printed, 0});
  const QTPolynomial& p = rec(a.m, a.n, a.s, a.k);
  Json query{{"m", a.m}, {"n", a.n}, {"k", a.k}, {"s", a.s}};
  if (a.printed) query["initial_condition"] = "printed";
  return {render_polynomial(query, p, format), 0};
}

LemmaIndexing parse_indexing(const std::string& s) {
  if (s == "corrected") return LemmaIndexing::corrected;
  if (s == "printed") return LemmaIndexing::printed;
  throw UsageError("unknown indexing: " + s);
}

Outcome do_verify(const VerifyArgs& a, const Settings& settings, Format format) {
  const auto points = [&] { return sample_points(a.points, settings.seed); };
  const auto indexing = parse_indexing(a.indexing);
  CheckReport report;
  const std::string& c = a.check;
  if (c == "recursion") {
    report = check_recursion(a.m, a.n, a.k, BounceRecursion::Options{a.printed_initial, 0});
  } else if (c == "wilson") {
    report = check_wilson(a.m, a.n, a.k);
  } else if (c == "zeta-transport") {
    report = check_zeta_transport(a.m, a.n, a.k);
  } else if (c == "identity1") {
    report = check_identity_1(a.m, a.n, a.k, points());
  } else if (c == "identity2") {
    report = check_identity_2(a.m, a.n, a.k, points(), indexing);
  } else if (c == "lemma") {
    const auto pts = points();
    if (a.r) {
      report = check_lemma(a.m, a.n, *a.r, a.k, pts, indexing);
    } else {
      // Every r with a non-negative exponent.
      report.name = "lemma";
      for (int r = 1; r <= a.m + 1; ++r) merge(report, check_lemma(a.m, a.n, r, a.k, pts, indexing));
    }
  } else if (c == "final") {
    report = check_final(a.m, a.n, a.k, points());
  } else if (c == "final-interpolated") {
    report = check_final_interpolated(a.m, a.n, a.k);
  } else if (c == "pmaj-conjecture") {
    report = check_pmaj_conjecture(a.m, a.n, a.k, points());
  } else if (c == "pldp-dinv") {
    report = check_pldp_dinv(a.n, a.k, points());
  } else {
    throw UsageError("unknown check: " + c);
  }
  return {render_report(report, format), report.equal() ? 0 : 1};
}

Outcome do_selftest(const SelftestArgs& a, Format format) {
  PinnedExamples f = pinned_examples();
  // Negative control: break one pinned value so its case must fail.
  if (a.corrupt.empty()) {
  } else if (a.corrupt == "area-word") {
    f.word_area += 1;
  } else if (a.corrupt == "bounce-path") {
    f.bounce_value += 1;
  } else if (a.corrupt == "zeta-example") {
    f.zeta_rises.back() += 1;
  } else if (a.corrupt == "parking-function") {
    f.pf_image_word += " 0";
  } else if (a.corrupt == "labelled-polyomino") {
    f.pldp_area += 1;
  } else {
    throw UsageError("unknown selftest case: " + a.corrupt);
  }
  const auto cases = run_selftest(f);
  const Json verdict = selftest_json(cases);
  const int code = verdict.at("passed").get<bool>() ? 0 : 1;
  if (a.json || format == Format::json) return {verdict.dump(2) + "\n", code};
  std::string out;
  if (format == Format::csv) {
    out = csv_row({"case", "passed", "detail"});
    for (const auto& c : cases) out += csv_row({c.name, c.passed ? "true" : "false", c.detail});
    return {out, code};
  }
  int failed = 0;
  for (const auto& c : cases) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + (c.passed ? "" : ": " + c.detail) + "\n";
    failed += c.passed ? 0 : 1;
  }
  out += failed ? std::to_string(failed) + " of " + std::to_string(cases.size()) + " cases failed\n"
                : "all " + std::to_string(cases.size()) + " cases passed\n";
  return {out, code};
}

int emit(const Outcome& outcome, const Settings& settings, std::ostream& out, std::ostream& err) {
  if (settings.out_path.empty()) {
    out << outcome.text;
    return outcome.code;
  }
  std::ofstream file(settings.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << settings.out_path << "\n";
    return 2;
  }
  file << outcome.text;
  return outcome.code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decorated polyominoes, labelled Dyck paths and their q,t-enumerators"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--format", settings.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", settings.out_path, "write the result to this file");
  app.add_option("--seed", settings.seed, "seed for sample-point selection");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "list every object of a family");
  enumerate->add_option("--kind", ea.kind, "plain, bullet, star, labelled, pf2 or pldp")
      ->check(CLI::IsMember({"plain", "bullet", "star", "labelled", "pf2", "pldp"}));
  enumerate->add_option("--m", ea.m, "width, ones, or blanks");
  enumerate->add_option("--n", ea.n, "height, twos, or labels minus one");
  enumerate->add_option("--k", ea.k, "number of decorations");
  enumerate->add_option("--content", ea.content, "comma-separated label multiset");

  ObjectArgs sa;
  auto* stats = app.add_subcommand("stats", "statistics of one object");
  stats->add_option("--in", sa.in, "inline JSON or a JSON file")->required();
  stats->add_option("--object", sa.object, "auto, polyomino, labelled, pldp or pf2")
      ->check(CLI::IsMember({"auto", "polyomino", "labelled", "pldp", "pf2"}));

  ObjectArgs ma;
  auto* map = app.add_subcommand("map", "apply a bijection to one object");
  map->add_option("--bijection", ma.bijection, "zeta, zeta-inv, pf2, pf2-inv, pldp or pldp-inv")
      ->required()
      ->check(CLI::IsMember({"zeta", "zeta-inv", "pf2", "pf2-inv", "pldp", "pldp-inv"}));
  map->add_option("--in", ma.in, "inline JSON or a JSON file")->required();

  EnumeratorArgs na;
  auto* enumerator = app.add_subcommand("enumerator", "brute-force q,t-enumerator");
  enumerator->add_option("--family", na.family, "rp-bullet, rp-star, pf2 or pldp");
  enumerator->add_option("--m", na.m);
  enumerator->add_option("--n", na.n);
  enumerator->add_option("--k", na.k);
  enumerator->add_option("--s", na.s, "restrict to one value of s");
  enumerator->add_option("--stats", na.stats, "statistic pair, e.g. area,bounce");
  enumerator->add_option("--content", na.content, "label multiset for pldp");

  RecursionArgs ra;
  auto* recursion = app.add_subcommand("recursion", "evaluate the bounce recursion");
  recursion->add_option("--m", ra.m)->required();
  recursion->add_option("--n", ra.n)->required();
  recursion->add_option("--s", ra.s)->required();
  recursion->add_option("--k", ra.k);
  recursion->add_flag("--printed-initial", ra.printed, "use the k-independent initial value at s = n+1");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->add_option("--check", va.check)
      ->required()
      ->check(CLI::IsMember({"recursion", "wilson", "zeta-transport", "identity1", "identity2", "lemma", "final",
                             "final-interpolated", "pmaj-conjecture", "pldp-dinv"}));
  verify->add_option("--m", va.m, "m, or the largest m for exhaustive checks");
  verify->add_option("--n", va.n, "n, or the largest n for exhaustive checks");
  verify->add_option("--k", va.k, "k, or the largest k for exhaustive checks");
  verify->add_option("--r", va.r, "zero count for the lemma; all r if omitted");
  verify->add_option("--points", va.points, "number of rational sample points");
  verify->add_option("--indexing", va.indexing, "corrected or printed")->check(CLI::IsMember({"corrected", "printed"}));
  verify->add_flag("--printed-initial", va.printed_initial, "recursion check with the k-independent initial value");

  SelftestArgs ta;
  auto* selftest = app.add_subcommand("selftest", "pinned worked examples");
  selftest->add_flag("--json", ta.json, "machine-readable verdicts");
  selftest->add_option("--corrupt", ta.corrupt, "break one pinned value (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Outcome outcome;
    if (enumerate->parsed()) {
      outcome = do_enumerate(ea, parse_format(settings.format, Format::json));
    } else if (stats->parsed()) {
      outcome = {render_stats(stats_of(read_input(sa.in), sa.object), parse_format(settings.format, Format::json)), 0};
    } else if (map->parsed()) {
      outcome = do_map(ma, parse_format(settings.format, Format::json));
    } else if (enumerator->parsed()) {
      outcome = do_enumerator(na, parse_format(settings.format, Format::text));
    } else if (recursion->parsed()) {
      outcome = do_recursion(ra, parse_format(settings.format, Format::text));
    } else if (verify->parsed()) {
      outcome = do_verify(va, settings, parse_format(settings.format, Format::json));
    } else {
      outcome = do_selftest(ta, parse_format(settings.format, Format::text));
    }
    return emit(outcome, settings, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // InvalidObject, invalid_argument and out_of_range all land here.
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"polyo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace polyo::cli
