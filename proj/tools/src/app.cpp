#include "trimode/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "trimode/cli/commands.hpp"
#include "trimode/errors.hpp"

namespace trimode::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  int kept = 1;
  int n_max = 4;
  bool oracle = false;
  int threads = 0;
  std::vector<int> n{0, 0, 0};
  int points = 21;
  double extent = 4.0;
  SweepAxis axis1;
  SweepAxis axis2;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  f << text;
  if (!f) throw UsageError("cannot write output file " + o.output);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three coupled quantum harmonic oscillators: normal modes, spectra and entanglement", "trimode"};
  app.require_subcommand(1);
  Options o;
  o.axis1.steps = 11;
  o.axis2.steps = 11;

  auto io = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input", o.input, "System JSON file")->check(CLI::ExistingFile);
    if (input_required) in->required();
    sub->add_option("--output", o.output, "Write the result to this file instead of stdout");
  };

  auto* dec = app.add_subcommand("decouple", "Normal-mode frequencies and rotation angles (JSON)");
  io(dec, true);

  auto* spec = app.add_subcommand("spectrum", "Energy levels up to a total quantum number (CSV)");
  io(spec, true);
  spec->add_option("--n-max", o.n_max, "Largest n1+n2+n3")->check(CLI::Range(0, 30));

  auto* wf = app.add_subcommand("wavefunction", "Eigenfunction on a Cartesian grid (CSV)");
  io(wf, true);
  wf->add_option("--n", o.n, "Quantum numbers n1,n2,n3")->delimiter(',')->expected(3);
  wf->add_option("--points", o.points, "Grid points per axis")->check(CLI::Range(2, 400));
  wf->add_option("--extent", o.extent, "Half-width in characteristic lengths")->check(CLI::PositiveNumber);

  auto* pur = app.add_subcommand("purity", "Ground-state purity of one oscillator (JSON)");
  io(pur, true);
  pur->add_option("--kept", o.kept, "Oscillator kept in the reduced state")->check(CLI::Range(1, 3));
  pur->add_flag("--oracle", o.oracle, "Also integrate the purity by quadrature");

  auto* sw = app.add_subcommand("sweep", "Purity over a 1D or 2D parameter grid (CSV)");
  io(sw, true);
  sw->add_option("--kept", o.kept, "Oscillator kept in the reduced state")->check(CLI::Range(1, 3));
  sw->add_option("--threads", o.threads, "Worker threads (default: available parallelism)")
      ->check(CLI::Range(1, 1024));
  sw->add_option("--param", o.axis1.path, "Parameter path, e.g. couplings.d12")->required();
  sw->add_option("--start", o.axis1.start)->required();
  sw->add_option("--stop", o.axis1.stop)->required();
  sw->add_option("--steps", o.axis1.steps);
  auto* p2 = sw->add_option("--param2", o.axis2.path, "Second parameter for a 2D grid");
  sw->add_option("--start2", o.axis2.start)->needs(p2);
  sw->add_option("--stop2", o.axis2.stop)->needs(p2);
  sw->add_option("--steps2", o.axis2.steps)->needs(p2);

  auto* ver = app.add_subcommand("verify", "Run the self-consistency checks");
  io(ver, false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (ver->parsed()) {
      const SystemInput in = o.input.empty() ? SystemInput{default_verify_system(), std::nullopt}
                                             : read_system_file(o.input);
      const VerifyReport rep = verify(in);
      emit(rep.text(), o, out);
      return rep.passed() ? kExitOk : kExitVerify;
    }
    const SystemInput in = read_system_file(o.input);
    if (dec->parsed()) {
      emit(decouple_json(in.system), o, out);
    } else if (spec->parsed()) {
      emit(spectrum_csv(in.system, o.n_max), o, out);
    } else if (wf->parsed()) {
      emit(wavefunction_csv(in.system, {o.n[0], o.n[1], o.n[2]}, o.points, o.extent), o, out);
    } else if (pur->parsed()) {
      emit(purity_json(in.system, o.kept, o.oracle), o, out);
    } else if (sw->parsed()) {
      SweepSpec s{o.axis1, std::nullopt, o.kept};
      if (!o.axis2.path.empty()) s.second = o.axis2;
      emit(sweep_csv(in.system, s, o.threads), o, out);
    }
    return kExitOk;
  } catch (const InstabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOracle;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace trimode::cli
