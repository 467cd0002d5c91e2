#include "omegadet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "omegadet/bounds.hpp"
#include "omegadet/hoa.hpp"
#include "omegadet/lasso.hpp"
#include "omegadet/parity.hpp"
#include "omegadet/random_automaton.hpp"
#include "omegadet/safra.hpp"

namespace omegadet
{
  namespace
  {
    // Usage and format problems; reported with exit code 2.
    struct UsageError : std::runtime_error
    {
      using std::runtime_error::runtime_error;
    };

    Automaton
    read_automaton(const std::string& path)
    {
      std::ifstream in(path);
      if (!in)
        throw UsageError("cannot read '" + path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      try
        {
          return parse_hoa(buf.str());
        }
      catch (const HoaError& e)
        {
          throw UsageError(path + ":" + e.what());
        }
    }

    void
    write_automaton(const std::string& path, const Automaton& a, std::ostream& out)
    {
      std::string text = emit_hoa(a);
      if (path == "-")
        {
          out << text;
          return;
        }
      std::ofstream file(path);
      if (!file || !(file << text))
        throw UsageError("cannot write '" + path + "'");
    }

    std::size_t
    pair_count(const Automaton& a)
    {
      if (auto* s = std::get_if<StreettAcceptance>(&a.acceptance))
        return s->pairs.size();
      if (auto* r = std::get_if<RabinAcceptance>(&a.acceptance))
        return r->pairs.size();
      return 0;
    }

    unsigned
    max_priority(const Automaton& d)
    {
      const auto& p = std::get<ParityAcceptance>(d.acceptance).priority;
      return p.empty() ? 0 : *std::max_element(p.begin(), p.end());
    }

    struct Determinized
    {
      Automaton result;
      BigCount bound;
    };

    Determinized
    determinize(const Automaton& a, const std::string& type, const std::string& backend)
    {
      const std::size_t n = a.state_count;
      if (type == "buchi")
        {
          if (!has_acceptance<BuchiAcceptance>(a))
            throw UsageError("--type buchi needs a Buchi automaton, got "
                             + acceptance_name(a.acceptance));
          if (backend == "safra")
            return {safra_determinize(a), safra_buchi_bound(n)};
          return {nbw_to_dpw(a), compact_buchi_bound(n)};
        }
      if (!has_acceptance<StreettAcceptance>(a))
        throw UsageError("--type streett needs a Streett automaton, got "
                         + acceptance_name(a.acceptance));
      const std::size_t k = pair_count(a);
      if (backend == "safra")
        return {streett_safra_determinize(a), safra_streett_bound(n, k)};
      return {nsw_to_dpw(a), compact_streett_bound(n, k)};
    }

    std::string
    guess_type(const Automaton& a)
    {
      return has_acceptance<StreettAcceptance>(a) ? "streett" : "buchi";
    }

    std::vector<SymbolId>
    parse_word(const std::string& text, const Alphabet& sigma, const char* what)
    {
      std::vector<SymbolId> out;
      if (text.empty())
        return out;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ','))
        {
          if (auto s = sigma.find(item))
            out.push_back(*s);
          else if (!item.empty() && std::all_of(item.begin(), item.end(), ::isdigit)
                   && std::stoul(item) < sigma.size())
            out.push_back(static_cast<SymbolId>(std::stoul(item)));
          else
            throw UsageError(std::string("unknown symbol '") + item + "' in " + what);
        }
      return out;
    }

    void
    print_stats(std::ostream& out, const Automaton& a)
    {
      out << "states: " << a.state_count << "\n";
      out << "symbols: " << a.alphabet.size() << "\n";
      out << "edges: " << a.edge_count() << "\n";
      out << "acceptance: " << acceptance_name(a.acceptance) << "\n";
      out << "deterministic: " << (a.deterministic ? "yes" : "no") << "\n";
      out << "complete: " << (a.is_complete() ? "yes" : "no") << "\n";
      if (has_acceptance<ParityAcceptance>(a))
        out << "max_priority: " << max_priority(a) << "\n";
    }

    struct Options
    {
      std::string type = "buchi";
      std::string backend = "compact";
      std::string input;
      std::string output;
      bool stats = false;
      std::string prefix;
      std::string period;
      std::string left;
      std::string right;
      std::size_t max_prefix = 3;
      std::size_t max_period = 4;
      std::size_t random = 0;
      std::size_t states = 3;
      std::size_t pairs = 1;
      std::uint64_t seed = 1;
    };

    int
    cmd_determinize(const Options& o, std::ostream& out)
    {
      Automaton a = read_automaton(o.input);
      Determinized d = determinize(a, o.type, o.backend);
      write_automaton(o.output, d.result, out);
      if (o.stats)
        {
          out << "input_states: " << a.state_count << "\n";
          out << "states: " << d.result.state_count << "\n";
          out << "acceptance: " << acceptance_name(d.result.acceptance) << "\n";
          if (has_acceptance<ParityAcceptance>(d.result))
            out << "max_priority: " << max_priority(d.result) << "\n";
          out << "bound: " << d.bound << "\n";
          out << "within_bound: " << (d.bound >= d.result.state_count ? "yes" : "no") << "\n";
        }
      return 0;
    }

    int
    cmd_complement(const Options& o, std::ostream& out)
    {
      Automaton a = read_automaton(o.input);
      Automaton d;
      if (has_acceptance<ParityAcceptance>(a))
        {
          if (!a.deterministic || !a.is_complete())
            throw UsageError("complement refuses nondeterministic or incomplete parity input");
          d = a;
        }
      else
        d = determinize(a, guess_type(a), "compact").result;
      Automaton c = dualize_parity(d);
      write_automaton(o.output, c, out);
      out << "states: " << c.state_count << "\n";
      out << "acceptance: " << acceptance_name(c.acceptance) << "\n";
      return 0;
    }

    int
    cmd_member(const Options& o, std::ostream& out)
    {
      Automaton a = read_automaton(o.input);
      Lasso l{parse_word(o.prefix, a.alphabet, "--prefix"),
              parse_word(o.period, a.alphabet, "--period")};
      if (l.period.empty())
        throw UsageError("--period must be nonempty");
      out << "lasso: " << to_string(l, a.alphabet) << "\n";
      bool accepted;
      if (a.deterministic && a.is_complete())
        {
          CycleVerdict v = run_deterministic(a, l);
          accepted = v.accepted;
          out << "accepted: " << (accepted ? "yes" : "no") << "\n";
          out << "cycle_states:";
          for (StateId s : v.cycle)
            out << ' ' << s;
          out << "\n";
          if (auto* p = std::get_if<ParityAcceptance>(&a.acceptance))
            {
              out << "cycle_priorities:";
              for (StateId s : v.cycle)
                out << ' ' << p->priority[s];
              out << "\n";
            }
          out << "entry_steps: " << v.entry_steps << "\n";
        }
      else
        {
          accepted = member(a, l);
          out << "accepted: " << (accepted ? "yes" : "no") << "\n";
        }
      return accepted ? 0 : 1;
    }

    void
    print_disagreement(std::ostream& out, const Disagreement& d, const Alphabet& sigma)
    {
      out << "counterexample: " << to_string(d.lasso, sigma) << "\n";
      out << "left: " << (d.left ? "accept" : "reject") << "\n";
      out << "right: " << (d.right ? "accept" : "reject") << "\n";
    }

    int
    cmd_xcheck(const Options& o, std::ostream& out)
    {
      if (o.random == 0)
        {
          if (o.left.empty() || o.right.empty())
            throw UsageError("xcheck needs --left and --right, or --random");
          Automaton l = read_automaton(o.left);
          Automaton r = read_automaton(o.right);
          if (!(l.alphabet.symbols == r.alphabet.symbols))
            throw UsageError("--left and --right use different alphabets");
          auto lassos = enumerate_lassos(l.alphabet, o.max_prefix, o.max_period);
          DiffReport rep = differential_check(l, r, lassos);
          out << "lassos: " << rep.examined() << "\n";
          out << "agreed: " << rep.agreed << "\n";
          out << "disagreements: " << rep.disagreements.size() << "\n";
          if (!rep.disagreements.empty())
            print_disagreement(out, rep.disagreements.front(), l.alphabet);
          return rep.disagreements.empty() ? 0 : 1;
        }

      // random corpus: each automaton against its own determinization
      RandomSpec spec;
      spec.states = o.states;
      spec.symbols = 2;
      spec.pairs = o.pairs;
      std::size_t examined = 0, agreed = 0, failing = 0;
      for (std::size_t i = 0; i < o.random; ++i)
        {
          const std::uint64_t seed = o.seed + i;
          Automaton a = o.type == "streett" ? random_nsw(spec, seed) : random_nbw(spec, seed);
          Automaton d = determinize(a, o.type, o.backend).result;
          auto lassos = enumerate_lassos(a.alphabet, o.max_prefix, o.max_period);
          DiffReport rep = differential_check(a, d, lassos);
          examined += rep.examined();
          agreed += rep.agreed;
          if (!rep.disagreements.empty())
            {
              if (failing++ == 0)
                {
                  out << "failing_seed: " << seed << "\n";
                  print_disagreement(out, rep.disagreements.front(), a.alphabet);
                }
            }
        }
      out << "automata: " << o.random << "\n";
      out << "lassos: " << examined << "\n";
      out << "agreed: " << agreed << "\n";
      out << "disagreements: " << examined - agreed << "\n";
      return failing ? 1 : 0;
    }

    int
    cmd_stats(const Options& o, std::ostream& out)
    {
      print_stats(out, read_automaton(o.input));
      return 0;
    }
  }

  int
  run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
  {
    CLI::App app{"Determinization of Buchi and Streett automata into parity automata",
                 "omegadet"};
    app.require_subcommand(1, 1);
    Options o;
    const std::vector<std::string> types{"buchi", "streett"};
    const std::vector<std::string> backends{"compact", "safra"};

    auto* det = app.add_subcommand("determinize", "determinize a Buchi or Streett automaton");
    det->add_option("--type", o.type, "input acceptance")->check(CLI::IsMember(types));
    det->add_option("--backend", o.backend, "compact (parity) or safra (Rabin)")
      ->check(CLI::IsMember(backends));
    det->add_option("--input", o.input)->required();
    det->add_option("--output", o.output, "output file, '-' for stdout")->required();
    det->add_flag("--stats", o.stats, "print state count, max priority and bound");

    auto* comp = app.add_subcommand("complement", "complement via a deterministic parity automaton");
    comp->add_option("--input", o.input)->required();
    comp->add_option("--output", o.output)->required();

    auto* mem = app.add_subcommand("member", "decide membership of a lasso word");
    mem->add_option("--input", o.input)->required();
    mem->add_option("--prefix", o.prefix, "comma-separated symbols");
    mem->add_option("--period", o.period, "comma-separated symbols")->required();

    auto* xc = app.add_subcommand("xcheck", "compare languages on every lasso up to a size");
    xc->add_option("--left", o.left);
    xc->add_option("--right", o.right);
    xc->add_option("--max-prefix", o.max_prefix);
    xc->add_option("--max-period", o.max_period)->check(CLI::PositiveNumber);
    xc->add_option("--random", o.random, "check COUNT random automata against their output");
    xc->add_option("--states", o.states)->check(CLI::Range(1, 8));
    xc->add_option("--pairs", o.pairs)->check(CLI::Range(0, 4));
    xc->add_option("--seed", o.seed);
    xc->add_option("--type", o.type)->check(CLI::IsMember(types));
    xc->add_option("--backend", o.backend)->check(CLI::IsMember(backends));

    auto* st = app.add_subcommand("stats", "print automaton statistics");
    st->add_option("--input", o.input)->required();

    try
      {
        app.parse(argc, argv);
      }
    catch (const CLI::ParseError& e)
      {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
      }

    try
      {
        if (*det)
          return cmd_determinize(o, out);
        if (*comp)
          return cmd_complement(o, out);
        if (*mem)
          return cmd_member(o, out);
        if (*xc)
          return cmd_xcheck(o, out);
        return cmd_stats(o, out);
      }
    catch (const UsageError& e)
      {
        err << "omegadet: " << e.what() << "\n";
        return 2;
      }
    catch (const std::invalid_argument& e)
      {
        err << "omegadet: " << e.what() << "\n";
        return 2;
      }
  }
}
