#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "omegadet/cli.hpp"
#include "omegadet/hoa.hpp"
#include "omegadet/parity.hpp"
#include "support.hpp"

using namespace omegadet;
namespace fs = std::filesystem;

namespace
{
  struct Run
  {
    int code;
    std::string out;
    std::string err;
  };

  Run
  run(std::vector<std::string> args)
  {
    args.insert(args.begin(), "omegadet");
    std::vector<const char*> argv;
    for (const auto& a : args)
      argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  struct Scratch
  {
    fs::path dir;
    Scratch()
    {
      dir = fs::temp_directory_path() / ("omegadet-cli-" + std::to_string(::getpid()));
      fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) const
    {
      auto p = dir / name;
      std::ofstream(p) << text;
      return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
  };

  std::string
  slurp(const std::string& path)
  {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string
  value(const std::string& out, const std::string& key)
  {
    auto at = out.find(key + ": ");
    if (at == std::string::npos)
      return "";
    auto from = at + key.size() + 2;
    return out.substr(from, out.find('\n', from) - from);
  }
}

TEST_CASE("determinize, member, xcheck and complement")
{
  Scratch s;
  std::string nbw = s.write("nbw.hoa", emit_hoa(test::infinitely_many_a()));
  std::string dpw = s.path("dpw.hoa");

  Run det = run({"determinize", "--type", "buchi", "--backend", "compact", "--input", nbw,
                 "--output", dpw, "--stats"});
  CHECK(det.code == 0);
  CHECK(std::stoul(value(det.out, "states")) <= 16);
  CHECK(value(det.out, "bound") == "16");
  CHECK(value(det.out, "within_bound") == "yes");
  CHECK(std::stoul(value(det.out, "max_priority")) <= 3);
  CHECK(slurp(dpw) == emit_hoa(nbw_to_dpw(test::infinitely_many_a())));

  Run yes = run({"member", "--input", dpw, "--prefix", "a", "--period", "a,b"});
  CHECK(yes.code == 0);
  CHECK(value(yes.out, "accepted") == "yes");
  CHECK_FALSE(value(yes.out, "cycle_priorities").empty());
  Run no = run({"member", "--input", dpw, "--period", "b"});
  CHECK(no.code == 1);
  CHECK(value(no.out, "accepted") == "no");

  Run agree = run({"xcheck", "--left", nbw, "--right", dpw, "--max-prefix", "3", "--max-period",
                   "4"});
  CHECK(agree.code == 0);
  CHECK(value(agree.out, "agreed") == "450");

  std::string comp = s.path("comp.hoa");
  CHECK(run({"complement", "--input", nbw, "--output", comp}).code == 0);
  Run differ = run({"xcheck", "--left", nbw, "--right", comp});
  CHECK(differ.code == 1);
  CHECK(value(differ.out, "agreed") == "0");
  CHECK(value(differ.out, "counterexample") == "prefix= period=a");

  Run twice = run({"complement", "--input", comp, "--output", s.path("again.hoa")});
  CHECK(twice.code == 0);
  CHECK(run({"xcheck", "--left", nbw, "--right", s.path("again.hoa")}).code == 0);

  Run rabin = run({"determinize", "--backend", "safra", "--input", nbw, "--output",
                   s.path("drw.hoa")});
  CHECK(rabin.code == 0);
  CHECK(run({"xcheck", "--left", s.path("drw.hoa"), "--right", dpw}).code == 0);

  Run stats = run({"stats", "--input", dpw});
  CHECK(stats.code == 0);
  CHECK(value(stats.out, "deterministic") == "yes");
}

TEST_CASE("complement refuses nondeterministic parity input")
{
  Scratch s;
  ParityAcceptance acc{{0, 1}, 2};
  Automaton p(Alphabet::from_aps({"a"}), 2, acc);
  p.add_edge(0, 0, 0);
  p.add_edge(0, 0, 1);
  p.add_edge(0, 1, 0);
  p.add_edge(1, 0, 1);
  p.add_edge(1, 1, 1);
  std::string in = s.write("p.hoa", emit_hoa(p));
  Run r = run({"complement", "--input", in, "--output", s.path("out.hoa")});
  CHECK(r.code == 2);
  CHECK(r.err.find("nondeterministic") != std::string::npos);
}

TEST_CASE("usage and format errors exit with 2")
{
  Scratch s;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"stats"}).code == 2);
  CHECK(run({"stats", "--input", s.path("missing.hoa")}).code == 2);
  std::string bad = s.write("bad.hoa", "HOA: v1\nStates: 1\n--BODY--\n");
  Run r = run({"stats", "--input", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.hoa:") != std::string::npos);
  std::string nbw = s.write("nbw.hoa", emit_hoa(test::infinitely_many_a()));
  CHECK(run({"determinize", "--type", "streett", "--input", nbw, "--output", "-"}).code == 2);
  CHECK(run({"determinize", "--type", "rabin", "--input", nbw, "--output", "-"}).code == 2);
  CHECK(run({"member", "--input", nbw, "--period", "c"}).code == 2);
}

TEST_CASE("random cross-checks are reproducible")
{
  std::vector<std::string> args{"xcheck", "--random", "6", "--states", "3", "--seed", "11",
                                "--max-prefix", "2", "--max-period", "3"};
  Run one = run(args);
  Run two = run(args);
  CHECK(one.code == 0);
  CHECK(one.out == two.out);
  CHECK(value(one.out, "disagreements") == "0");

  Run streett = run({"xcheck", "--random", "6", "--states", "2", "--pairs", "2", "--type",
                     "streett", "--seed", "3", "--max-prefix", "2", "--max-period", "3"});
  CHECK(streett.code == 0);
}
