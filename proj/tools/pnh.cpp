// pnh: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
// 3 coset enumeration overflow.

#include <CLI11.hpp>
#include <json.hpp>

#include <future>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pnh/pnh.hpp"

using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "pnh/1";

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kOverflow = 3 };

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw pnh::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json generator_names(const pnh::AlphabetPtr& a) {
  ordered_json g = ordered_json::array();
  for (const auto& s : a->symbols()) g.push_back(s.token());
  return g;
}

ordered_json base_json(const std::string& stage, const pnh::Presentation& p) {
  ordered_json j;
  j["schema"] = kSchema;
  j["stage"] = stage;
  j["generators"] = generator_names(p.alphabet());
  j["relatorCount"] = p.relator_count();
  j["presentation"] = p.str();
  return j;
}

ordered_json invariants_json(const pnh::AbelianInvariants& inv) {
  ordered_json t = ordered_json::array();
  for (const auto& x : inv.torsion) t.push_back(x.str().size() < 18 ? ordered_json(x.convert_to<long long>()) : ordered_json(x.str()));
  return t;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::map<pnh::GenSym, long> parse_map(const std::string& spec) {
  std::map<pnh::GenSym, long> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw pnh::ParseError("expected gen=value in --map", 1, 1);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    try {
      out[pnh::GenSym(trim(item.substr(0, eq)))] = std::stol(trim(item.substr(eq + 1)));
    } catch (const std::logic_error&) {
      throw pnh::ParseError("bad value in --map entry '" + item + "'", 1, 1);
    }
  }
  return out;
}

std::vector<pnh::GenSym> parse_keep(const std::string& spec) {
  std::vector<pnh::GenSym> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

const char* verdict(bool b) { return b ? "holds" : "fails"; }

ordered_json regressions_json(const std::vector<pnh::RegressionResult>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json e;
    e["id"] = r.id;
    e["stage"] = pnh::to_string(r.stage);
    e["relation"] = r.text;
    e["holds"] = r.holds;
    if (r.holds_final) e["holdsFinal"] = *r.holds_final;
    e["suspect"] = r.suspect;
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json report_json(const pnh::PipelineReport& r) {
  ordered_json j = base_json("orbifold", r.final_presentation);
  j["k"] = r.k;
  j["m"] = r.m;
  if (r.order) j["order"] = *r.order;
  j["invariants"] = invariants_json(r.invariants);
  j["abelian"] = r.abelian;
  if (r.quotient_order) j["quotientOrder"] = *r.quotient_order;
  ordered_json st = ordered_json::array();
  for (const auto& s : r.stages)
    st.push_back({{"stage", s.stage}, {"generators", s.generators}, {"relatorCount", s.relators}, {"totalLength", s.total_length}});
  j["stages"] = st;
  j["regressions"] = regressions_json(r.regressions);
  j["ok"] = r.ok();
  return j;
}

void print_report(const pnh::PipelineReport& r) {
  std::cout << "pipeline k=" << r.k << " m=" << r.m << "\n";
  for (const auto& s : r.stages)
    std::cout << "  " << s.stage << ": " << s.generators << " generators, " << s.relators << " relators, length "
              << s.total_length << "\n";
  std::cout << "final " << r.final_presentation.str() << "\n";
  std::cout << "order " << (r.order ? std::to_string(*r.order) : "overflow") << "\n";
  std::cout << "invariants " << r.invariants.str() << "\n";
  std::cout << "abelian " << (r.abelian ? "yes" : "no") << "\n";
  std::cout << "quotient order " << (r.quotient_order ? std::to_string(*r.quotient_order) : "overflow") << "\n";
  std::size_t held = 0, asserted = 0;
  for (const auto& x : r.regressions) {
    if (x.suspect) continue;
    ++asserted;
    if (x.holds && x.holds_final.value_or(true)) ++held;
  }
  std::cout << "regressions " << held << "/" << asserted << " hold\n";
  for (const auto& x : r.regressions)
    if (x.suspect) std::cout << "  flagged " << x.id << ": " << x.text << " " << verdict(x.holds) << "\n";
  std::cout << "status " << (r.ok() ? "ok" : "FAILED") << "\n";
}

int finish_report(const pnh::PipelineReport& r) {
  if (!r.order || !r.quotient_order) return kOverflow;
  return r.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentations, braids and the orbifold group pipeline"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Structured output");

  auto* act = app.add_subcommand("act", "Apply a braid to a word in d1..dN");
  std::string braid_text, word_text;
  unsigned strands = 5;
  bool inverse = false;
  act->add_option("--braid,-b", braid_text, "Braid word over s1..s(N-1)")->required();
  act->add_option("--word,-w", word_text, "Word over d1..dN")->required();
  act->add_option("--n,-n", strands, "Number of strands")->check(CLI::Range(2u, 64u));
  act->add_flag("--inverse", inverse, "Apply the inverse braid");

  std::string file;
  bool simplify = false;
  std::string keep;
  auto* present = app.add_subcommand("present", "Parse, normalize and optionally simplify a presentation");
  present->add_option("file", file, "Presentation file, - for stdin");
  present->add_flag("--simplify", simplify, "Apply Tietze simplification");
  present->add_option("--keep", keep, "Comma-separated generators never eliminated");

  auto* schreier = app.add_subcommand("schreier", "Presentation of the kernel of a map onto Z/n");
  std::string map_text;
  unsigned modulus = 2;
  schreier->add_option("file", file, "Presentation file, - for stdin");
  schreier->add_option("--map", map_text, "Images, e.g. a=1,b=0")->required();
  schreier->add_option("--n,-n", modulus, "Order of the quotient")->check(CLI::Range(1u, 100000u));
  schreier->add_flag("--simplify", simplify, "Apply Tietze simplification");

  auto* tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  std::size_t max_cosets = pnh::kDefaultMaxCosets;
  std::string strategy = "hlt";
  tc->add_option("file", file, "Presentation file, - for stdin");
  tc->add_option("--max", max_cosets, "Coset limit");
  tc->add_option("--strategy", strategy, "hlt or felsch")->check(CLI::IsMember({"hlt", "felsch"}));

  auto* ab = app.add_subcommand("abelianize", "Abelian invariants via Smith normal form");
  ab->add_option("file", file, "Presentation file, - for stdin");

  auto* pipe = app.add_subcommand("pipeline", "Run the orbifold group computation");
  unsigned k = 1, max_k = 12;
  bool all = false;
  auto* kopt = pipe->add_option("--k,-k", k, "Parameter k >= 1")->check(CLI::Range(1u, 1000u));
  pipe->add_flag("--all", all, "Run k = 1..max-k")->excludes(kopt);
  pipe->add_option("--max-k", max_k, "Largest k for --all")->check(CLI::Range(1u, 1000u));
  pipe->add_option("--max-cosets", max_cosets, "Coset limit");

  auto* cfg = app.add_subcommand("verify-config", "Exact checks of the conic and cubic configuration");

  auto* reg = app.add_subcommand("regression", "Check the regression corpus in the finite quotients");
  reg->add_option("--k,-k", k, "Parameter k >= 1")->check(CLI::Range(1u, 1000u));

  for (auto* sub : {act, present, schreier, tc, ab, pipe, cfg, reg}) sub->add_flag("--json", json, "Structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*act) {
      auto fib = pnh::Alphabet::indexed("d", 1, strands);
      pnh::Braid b = pnh::parse_braid(braid_text, strands);
      if (inverse) b = b.inverse();
      pnh::Word w = pnh::parse_word(word_text, fib);
      pnh::Word img = pnh::act(b, w, fib);
      if (json) {
        ordered_json j;
        j["schema"] = kSchema;
        j["stage"] = "act";
        j["generators"] = generator_names(fib);
        j["braid"] = b.str();
        j["word"] = w.str();
        j["image"] = img.str();
        print(j);
      } else {
        std::cout << img.str() << "\n";
      }
      return kOk;
    }

    if (*present) {
      pnh::Presentation p = pnh::parse_presentation(read_input(file));
      if (simplify) p = pnh::simplify(p, {100000, parse_keep(keep)}).presentation;
      if (json)
        print(base_json(simplify ? "simplified" : "input", p));
      else
        std::cout << p.str() << "\n";
      return kOk;
    }

    if (*schreier) {
      pnh::Presentation p = pnh::parse_presentation(read_input(file));
      pnh::CyclicMap q(p, modulus, parse_map(map_text));
      pnh::SubgroupPresentation sub = pnh::subgroup_presentation(p, q);
      pnh::Presentation out = sub.presentation;
      if (simplify) out = pnh::simplify(out, {}).presentation;
      if (json) {
        ordered_json j = base_json("schreier", out);
        ordered_json bm = ordered_json::object();
        for (std::size_t i = 0; i < sub.generators.alphabet->size(); ++i)
          bm[(*sub.generators.alphabet)[i].token()] = sub.generators.backmap[i].str();
        j["backmap"] = bm;
        print(j);
      } else {
        std::cout << "generators " << out.generator_count() << "\n" << out.str() << "\n";
      }
      return kOk;
    }

    if (*tc) {
      pnh::Presentation p = pnh::parse_presentation(read_input(file));
      auto e = pnh::todd_coxeter(p, max_cosets, strategy == "felsch" ? pnh::Strategy::Felsch : pnh::Strategy::Hlt);
      ordered_json j = base_json("tc", p);
      int code = kOk;
      if (auto* t = std::get_if<pnh::CosetTable>(&e)) {
        j["order"] = t->size();
        j["abelian"] = pnh::is_abelian(*t);
        if (!json) std::cout << "order " << t->size() << "\n";
      } else {
        const auto& o = std::get<pnh::Overflow>(e);
        j["overflow"] = {{"cosetsDefined", o.cosets_defined}, {"limit", o.limit}};
        if (!json) std::cout << "overflow after " << o.cosets_defined << " cosets (limit " << o.limit << ")\n";
        code = kOverflow;
      }
      if (json) print(j);
      return code;
    }

    if (*ab) {
      pnh::Presentation p = pnh::parse_presentation(read_input(file));
      auto inv = pnh::abelian_invariants(p);
      if (json) {
        ordered_json j = base_json("abelianize", p);
        j["invariants"] = invariants_json(inv);
        j["freeRank"] = inv.free_rank;
        print(j);
      } else {
        std::cout << inv.str() << "\n";
      }
      return kOk;
    }

    if (*pipe) {
      std::vector<unsigned> ks;
      if (all)
        for (unsigned i = 1; i <= max_k; ++i) ks.push_back(i);
      else
        ks.push_back(k);
      std::vector<std::future<pnh::PipelineReport>> jobs;
      for (unsigned kk : ks) jobs.push_back(std::async(std::launch::async, [kk, max_cosets] { return pnh::run(kk, max_cosets); }));
      int code = kOk;
      ordered_json arr = ordered_json::array();
      for (auto& f : jobs) {
        pnh::PipelineReport r = f.get();
        code = std::max(code, finish_report(r));
        if (json)
          arr.push_back(report_json(r));
        else
          print_report(r);
      }
      if (json) print(ks.size() == 1 ? arr[0] : arr);
      return code;
    }

    if (*cfg) {
      pnh::ConfigReport r = pnh::verify_persson_configuration();
      if (json) {
        ordered_json j;
        j["schema"] = kSchema;
        j["stage"] = "verify-config";
        ordered_json items = ordered_json::array();
        for (const auto& c : r.checks)
          items.push_back({{"item", c.item}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["items"] = items;
        j["ok"] = r.ok();
        print(j);
      } else {
        for (const auto& c : r.checks)
          std::cout << (c.pass ? "PASS " : "FAIL ") << c.item << ". " << c.name << ": " << c.detail << "\n";
        std::cout << (r.ok() ? "all checks pass" : "some checks FAILED") << "\n";
      }
      return r.ok() ? kOk : kCheckFailed;
    }

    if (*reg) {
      pnh::PipelineReport r = pnh::run(k);
      if (!r.order || !r.quotient_order) {
        std::cerr << "coset enumeration overflow\n";
        return kOverflow;
      }
      if (json) {
        ordered_json j = base_json("regression", r.final_presentation);
        j["k"] = k;
        j["regressions"] = regressions_json(r.regressions);
        j["ok"] = r.regressions_hold();
        print(j);
      } else {
        for (const auto& x : r.regressions) {
          std::cout << (x.suspect ? "flagged " : "") << x.id << " [" << pnh::to_string(x.stage) << "] " << x.text
                    << ": " << verdict(x.holds);
          if (x.holds_final) std::cout << ", final " << verdict(*x.holds_final);
          std::cout << "\n";
        }
        std::cout << (r.regressions_hold() ? "all asserted relations hold" : "some relations FAIL") << "\n";
      }
      return r.regressions_hold() ? kOk : kCheckFailed;
    }
  } catch (const pnh::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const pnh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
