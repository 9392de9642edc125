// Command-line front end. Talks to the library only through splitcomp.h.

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitcomp/splitcomp.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInput = 3 };

struct SessionDeleter {
  void operator()(sc_session* s) const { sc_session_destroy(s); }
};
struct CensusDeleter {
  void operator()(sc_census* c) const { sc_census_destroy(c); }
};
using Session = std::unique_ptr<sc_session, SessionDeleter>;
using CensusPtr = std::unique_ptr<sc_census, CensusDeleter>;

// Owns a string returned by the library.
struct Text {
  char* p = nullptr;
  ~Text() { sc_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

int exit_for(sc_status s) {
  switch (s) {
    case SC_OK: return kOk;
    case SC_ERR_INVALID_ARGUMENT:
    case SC_ERR_RESOURCE: return kUsage;
    case SC_ERR_PARSE:
    case SC_ERR_VALIDATION:
    case SC_ERR_DOMAIN: return kInput;
    case SC_ERR_INTERNAL: return kFailed;
  }
  return kFailed;
}

int report(sc_session* s, sc_status status) {
  std::cerr << "splitcomp: " << sc_status_name(status) << ": " << sc_session_last_error(s) << '\n';
  return exit_for(status);
}

Session open_session(int workers) {
  sc_session* s = nullptr;
  if (sc_session_create(workers, &s) != SC_OK) {
    std::cerr << "splitcomp: cannot create session\n";
    std::exit(kFailed);
  }
  return Session(s);
}

bool skip_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::string error_record(std::size_t line_no, sc_status status, const char* message) {
  nlohmann::ordered_json j;
  j["line"] = line_no;
  j["error"] = sc_status_name(status);
  j["message"] = message;
  return j.dump();
}

// Applies `fn` to every object line on stdin and prints one JSON line each.
template <class Fn>
int per_line(sc_session* s, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  bool any_failed = false;
  while (std::getline(std::cin, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    Text out;
    const sc_status st = fn(line.c_str(), out.out());
    if (st == SC_OK) {
      std::cout << out.str() << '\n';
    } else {
      any_failed = true;
      std::cout << error_record(line_no, st, sc_session_last_error(s)) << '\n';
    }
  }
  std::cout.flush();
  return any_failed ? kInput : kOk;
}

// ------------------------------------------------------------------ commands

struct EnumerateArgs {
  std::string cls;
  int n = 0;
  std::string balance = "all";
  bool no_y_isolates = false;
  bool count_only = false;
  std::string format;
  bool stream = false;
};

bool wanted(const std::string& filter, int balance) {
  if (filter == "all") return true;
  if (filter == "balanced") return balance == SC_BALANCED;
  return balance == SC_UNBALANCED;
}

std::string header_line(const std::string& cls, int n, std::size_t count, std::size_t balanced,
                        std::size_t unbalanced) {
  return "# class=" + cls + " n=" + std::to_string(n) + " count=" + std::to_string(count) +
         " balanced=" + std::to_string(balanced) + " unbalanced=" + std::to_string(unbalanced);
}

int cmd_enumerate(const EnumerateArgs& a, int workers) {
  const bool split = a.cls == "split";
  if (!a.format.empty() && (a.format == "g6") != split) {
    std::cerr << "splitcomp: format " << a.format << " is not available for class " << a.cls << '\n';
    return kUsage;
  }
  Session s = open_session(workers);
  std::size_t count = 0, balanced = 0, unbalanced = 0;
  auto tally = [&](int balance) {
    ++count;
    if (balance == SC_BALANCED) ++balanced;
    if (balance == SC_UNBALANCED) ++unbalanced;
  };

  if (a.stream) {
    struct Ctx {
      const EnumerateArgs* args;
      std::function<void(int)> count;
    } ctx{&a, tally};
    const sc_status st = sc_census_visit(
        s.get(), a.cls.c_str(), a.n, a.no_y_isolates ? 1 : 0,
        [](void* user, const char*, const char* line, int balance) -> int {
          auto* c = static_cast<Ctx*>(user);
          if (!wanted(c->args->balance, balance)) return 1;
          c->count(balance);
          if (!c->args->count_only) {
            std::fputs(line, stdout);
            std::fputc('\n', stdout);
            std::fflush(stdout);
          }
          return 1;
        },
        &ctx);
    if (st != SC_OK) return report(s.get(), st);
    std::cout << header_line(a.cls, a.n, count, balanced, unbalanced) << '\n';
    return kOk;
  }

  sc_census* raw = nullptr;
  const sc_status st = sc_census_create(s.get(), a.cls.c_str(), a.n, a.no_y_isolates ? 1 : 0, &raw);
  if (st != SC_OK) return report(s.get(), st);
  CensusPtr census(raw);
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < sc_census_size(census.get()); ++i) {
    Text line;
    int balance = 0;
    sc_census_entry(census.get(), i, nullptr, a.count_only ? nullptr : line.out(), &balance);
    if (!wanted(a.balance, balance)) continue;
    tally(balance);
    if (!a.count_only) lines.push_back(line.str());
  }
  std::cout << header_line(a.cls, a.n, count, balanced, unbalanced) << '\n';
  for (const auto& l : lines) std::cout << l << '\n';
  return kOk;
}

int cmd_classify(int workers) {
  Session s = open_session(workers);
  return per_line(s.get(), [&](const char* line, char** out) { return sc_classify(s.get(), line, out); });
}

int run_map(const std::string& name, int n, int workers) {
  const char* inverse = nullptr;
  if (sc_map_inverse(name.c_str(), &inverse) != SC_OK) {
    std::cerr << "splitcomp: unknown map " << name << '\n';
    return kUsage;
  }
  Session s = open_session(workers);
  return per_line(s.get(), [&](const char* line, char** out) { return sc_map(s.get(), name.c_str(), line, n, out); });
}

std::string compile_name(const std::string& cls, const std::string& direction) {
  return "compile-" + cls + "-" + direction;
}

int cmd_verify(const std::string& suite, int max_n, int workers) {
  Session s = open_session(workers);
  Text out;
  int passed = 0;
  const sc_status st = sc_verify(s.get(), suite.c_str(), max_n, out.out(), &passed);
  if (st != SC_OK) return report(s.get(), st);
  std::cout << out.str();
  if (suite == "counts") {
    const std::string text = out.str();
    const auto j = nlohmann::json::parse(text.substr(0, text.find('\n')));
    std::cout << "# n\tsplit\tbalanced\tunbalanced\tcover\tposet\txy\txy_all\tcumulative\n";
    for (const auto& r : j["details"]["table"])
      std::cout << "# " << r["n"] << '\t' << r["split"] << '\t' << r["split_balanced"] << '\t'
                << r["split_unbalanced"] << '\t' << r["cover"] << '\t' << r["poset"] << '\t' << r["xy"] << '\t'
                << r["xy_all"] << '\t' << r["cumulative"] << '\n';
  }
  return passed ? kOk : kFailed;
}

int cmd_gallery(int n, int workers) {
  Session s = open_session(workers);
  Text out;
  const sc_status st = sc_gallery(s.get(), n, out.out());
  if (st != SC_OK) return report(s.get(), st);
  std::cout << out.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split graphs, minimal set covers, XY-graphs and bipartite posets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sc_version()));
  int workers = 1;
  app.add_option("--workers", workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  const std::vector<std::string> classes{"split", "cover", "xy", "poset"};

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List every unlabeled object of a class on n points");
  en->add_option("--class", ea.cls, "Object class")->required()->check(CLI::IsMember(classes));
  en->add_option("--n", ea.n, "Number of points")->required()->check(CLI::NonNegativeNumber);
  en->add_option("--balance", ea.balance, "Balance filter")->check(CLI::IsMember({"all", "balanced", "unbalanced"}));
  en->add_flag("--no-y-isolates", ea.no_y_isolates, "XY-graphs: drop those with isolated Y-vertices");
  en->add_flag("--count-only", ea.count_only, "Print the header line only");
  en->add_option("--format", ea.format, "g6 (split) or json (other classes)")->check(CLI::IsMember({"g6", "json"}));
  en->add_flag("--stream", ea.stream, "Emit in generation order as found; header printed last");

  auto* cl = app.add_subcommand("classify", "Classify objects read from stdin, one per line");

  std::string from, to, compile_dir;
  bool inverse = false;
  int map_n = -1;
  auto* mp = app.add_subcommand("map", "Apply a bijection to objects read from stdin");
  mp->add_option("--from", from, "Source class (split, cover, xy, poset, split-shift)")->required();
  mp->add_option("--to", to, "Target class (split, cover, xy, poset, split-shift)")->required();
  mp->add_flag("--inverse", inverse, "Apply the inverse map instead");
  mp->add_option("--compile", compile_dir, "Compilation map of the class instead")
      ->check(CLI::IsMember({"down", "up"}));
  mp->add_option("--n", map_n, "Target order for compile up")->check(CLI::NonNegativeNumber);

  std::string cc_class, direction;
  int cc_n = -1;
  auto* cc = app.add_subcommand("compile", "Apply a compilation map to objects read from stdin");
  cc->add_option("--class", cc_class, "Object class")->required()->check(CLI::IsMember(classes));
  cc->add_option("--direction", direction, "down or up")->required()->check(CLI::IsMember({"down", "up"}));
  cc->add_option("--n", cc_n, "Target order for up")->check(CLI::NonNegativeNumber);

  std::string suite;
  int max_n = 0;
  auto* vf = app.add_subcommand("verify", "Run property suites over full censuses");
  vf->add_option("--suite", suite, "roundtrip, balance, compilation, choice, counts, triangle or all")->required();
  vf->add_option("--max-n", max_n, "Largest order checked")->required()->check(CLI::NonNegativeNumber);

  int gallery_n = 0;
  auto* ga = app.add_subcommand("gallery", "Aligned listing of all classes on n points");
  ga->add_option("--n", gallery_n, "Number of points")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::ios::sync_with_stdio(false);
  if (en->parsed()) return cmd_enumerate(ea, workers);
  if (cl->parsed()) return cmd_classify(workers);
  if (mp->parsed()) {
    if (!compile_dir.empty()) {
      if (from != to) {
        std::cerr << "splitcomp: --compile needs --from and --to to name the same class\n";
        return kUsage;
      }
      if (compile_dir == "up" && map_n < 0) {
        std::cerr << "splitcomp: --compile up needs --n\n";
        return kUsage;
      }
      return run_map(compile_name(from, compile_dir), map_n, workers);
    }
    std::string name = from + "->" + to;
    if (inverse) {
      const char* inv = nullptr;
      if (sc_map_inverse(name.c_str(), &inv) != SC_OK) {
        std::cerr << "splitcomp: unknown map " << name << '\n';
        return kUsage;
      }
      name = inv;
    }
    return run_map(name, -1, workers);
  }
  if (cc->parsed()) {
    if (direction == "up" && cc_n < 0) {
      std::cerr << "splitcomp: --direction up needs --n\n";
      return kUsage;
    }
    return run_map(compile_name(cc_class, direction), cc_n, workers);
  }
  if (vf->parsed()) return cmd_verify(suite, max_n, workers);
  if (ga->parsed()) return cmd_gallery(gallery_n, workers);
  return kUsage;
}
