#include "hrisk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hrisk/dominance.hpp"
#include "hrisk/expectile.hpp"
#include "hrisk/io.hpp"
#include "hrisk/oracle.hpp"
#include "hrisk/spectral.hpp"

namespace hrisk::cli {

namespace {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::yes:
      return "yes";
    case Outcome::no:
      return "no";
    default:
      return "undetermined";
  }
}

std::vector<double> parse_level_grid(const std::string& spec) {
  const std::size_t c1 = spec.find(':');
  const std::size_t c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      spec.find(':', c2 + 1) != std::string::npos) {
    throw std::runtime_error("level grid must look like lo:hi:count: " + spec);
  }
  const double lo = parse_real(spec.substr(0, c1));
  const double hi = parse_real(spec.substr(c1 + 1, c2 - c1 - 1));
  const double count_raw = parse_real(spec.substr(c2 + 1));
  if (count_raw < 1.0 || count_raw > 1e6 ||
      count_raw != std::floor(count_raw)) {
    throw std::runtime_error("level grid count must be a whole number >= 1");
  }
  if (!(lo <= hi)) {
    throw std::runtime_error("level grid needs lo <= hi");
  }
  const int count = static_cast<int>(count_raw);
  std::vector<double> out;
  if (count == 1) {
    out.push_back(lo);
  } else {
    for (int i = 0; i < count; ++i) {
      out.push_back(lo + (hi - lo) * i / (count - 1));
    }
  }
  return out;
}

GridSpec reference_bracket(const DiscreteDistribution& d) {
  const double lo = d.value(0);
  const double hi = d.value(d.size() - 1);
  const double span = std::max(hi - lo, 1.0);
  return {lo - span, hi + 1e-9, 10001};
}

GridSpec reference_support(const DiscreteDistribution& d) {
  return {d.value(0) - 1.0, d.value(d.size() - 1) + 1.0, 10001};
}

GridSpec reference_sweep(const DiscreteDistribution& x,
                         const DiscreteDistribution& y) {
  const double lo = std::min(x.value(0), y.value(0));
  const double hi = std::max(x.value(x.size() - 1), y.value(y.size() - 1));
  const double span = std::max(hi - lo, 1.0);
  return {lo - span, hi + span, 10001};
}

std::string json_levels(const std::vector<double>& levels) {
  std::string s = "[";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) s += ", ";
    s += format_number(levels[i]);
  }
  s += "]";
  return s;
}

std::string json_verdict(const DominanceVerdict& v,
                         const std::vector<double>& levels) {
  std::string s = "{\"outcome\": \"";
  s += outcome_name(v.outcome);
  s += "\", \"witness\": ";
  s += v.witness.has_value() ? format_number(*v.witness) : "null";
  s += ", \"margin\": " + format_number(v.margin);
  s += ", \"levels\": " + json_levels(levels) + "}\n";
  return s;
}

}  // namespace

std::string emit_curve(const NormSpec& n, const DiscreteDistribution& d,
                       std::vector<double> betas) {
  for (double b : betas) {
    if (!(b >= 0.0) || !(b < 1.0)) {
      throw std::invalid_argument("curve level must lie in [0, 1)");
    }
  }
  std::sort(betas.begin(), betas.end());
  const auto curve = minimizer_curve(n, d, betas);
  std::string s = "beta,value,t_star,derivative,f\n";
  for (const auto& p : curve) {
    const double derivative = (p.value - p.t_star) / (1.0 - p.beta);
    const double f = (1.0 - p.beta) * p.value;
    s += format_number(p.beta) + "," + format_number(p.value) + "," +
         format_number(p.t_star) + "," + format_number(derivative) + "," +
         format_number(f) + "\n";
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Risk and dominance calculations for discrete distributions.\n"
      "Inputs are gains: larger outcomes are better. Dominance verbs\n"
      "compare losses internally, checking the risk profiles of -X\n"
      "against -Y, so \"X dominated by Y\" means Y is preferable."};
  app.require_subcommand(1);

  std::string norm_spec;
  std::string order_spec;
  std::string betas_spec;
  std::string out_path;
  std::string info_format;
  std::vector<std::string> files;
  double beta = 0.0;
  double alpha = 0.0;
  bool as_weights = false;
  bool use_oracle = false;

  const auto add_common = [&](CLI::App* sub, int inputs) {
    sub->add_option("files", files, "input distribution file(s)")
        ->expected(inputs)
        ->required();
    sub->add_flag("--weights", as_weights,
                  "renormalize the probability column instead of requiring "
                  "it to sum to 1");
    sub->add_option("--out", out_path,
                    "write the report to this file instead of stdout");
    sub->add_flag("--oracle", use_oracle)->group("");
  };

  CLI::App* risk = app.add_subcommand(
      "risk", "evaluate the base functional named by --norm");
  risk->add_option("--norm", norm_spec, "norm spec")->required();
  add_common(risk, 1);

  CLI::App* higher = app.add_subcommand(
      "higher", "higher order risk at level --beta: the optimal value, the "
                "minimizing translation, and for mixture norms the "
                "truncation quantile");
  higher->add_option("--norm", norm_spec, "norm spec")->required();
  higher->add_option("--beta", beta, "risk level in [0,1)")->required();
  add_common(higher, 1);

  CLI::App* expectile_cmd = app.add_subcommand(
      "expectile", "expectile statistic, its mixture-maximum value, and "
                   "optionally the higher order value at --beta");
  expectile_cmd->add_option("--alpha", alpha, "asymmetry level in (0,1)")
      ->required();
  CLI::Option* expectile_beta =
      expectile_cmd->add_option("--beta", beta, "risk level in [0,1)");
  add_common(expectile_cmd, 1);

  CLI::App* dominance_cmd = app.add_subcommand(
      "dominance", "compare two gain distributions; orders: first, p:<real>, "
                   "spectral:<mixture-file>, verify (needs --norm)");
  dominance_cmd->add_option("--order", order_spec, "dominance order")
      ->required();
  dominance_cmd->add_option("--norm", norm_spec,
                            "norm spec for --order verify");
  add_common(dominance_cmd, 2);

  CLI::App* curve = app.add_subcommand(
      "curve", "CSV sweep of value, minimizer, derivative, and weighted "
               "value over a level grid");
  curve->add_option("--norm", norm_spec, "norm spec")->required();
  curve->add_option("--betas", betas_spec, "level grid lo:hi:count")
      ->required();
  add_common(curve, 1);

  CLI::App* info = app.add_subcommand(
      "info", "summarize a distribution; --format json or csv prints the "
              "atoms in round-trip precision");
  info->add_option("--format", info_format, "json|csv");
  add_common(info, 1);

  std::vector<const char*> argv;
  argv.push_back("hrisk");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto load = [&](const std::string& path) {
      return parse_distribution(read_file(path), as_weights);
    };
    std::string report;

    if (risk->parsed()) {
      const NormSpec n = parse_norm_spec(norm_spec);
      const auto d = load(files[0]);
      double value = 0.0;
      if (use_oracle) {
        if (n.kind() != NormSpec::Kind::spectral || n.mixture().size() != 1) {
          throw std::runtime_error(
              "reference evaluation is available for avar norms only");
        }
        value = dual_avar_sup(n.mixture().alpha(0), d);
      } else if (n.kind() == NormSpec::Kind::holder) {
        value = lp_norm(d, n.holder_p());
      } else if (n.kind() == NormSpec::Kind::spectral) {
        value = spectral_risk(n.mixture(), d);
      } else {
        value = expectile(n.expectile_alpha(), d);
      }
      report = "{\"value\": " + format_number(value) + "}\n";
    } else if (higher->parsed()) {
      const NormSpec n = parse_norm_spec(norm_spec);
      const auto d = load(files[0]);
      if (use_oracle) {
        const double value =
            grid_min_higher_order(n, beta, d, reference_bracket(d));
        report = "{\"value\": " + format_number(value) + "}\n";
      } else {
        const HigherOrderResult r = higher_order_risk(n, beta, d);
        report = "{\"value\": " + format_number(r.value) +
                 ", \"t_star\": " + format_number(r.t_star);
        if (r.u_beta.has_value()) {
          report += ", \"u_beta\": " + format_number(*r.u_beta);
        }
        report += "}\n";
      }
    } else if (expectile_cmd->parsed()) {
      const auto d = load(files[0]);
      if (use_oracle) {
        const double value =
            loss_argmin_expectile(alpha, d, reference_support(d));
        report = "{\"value\": " + format_number(value) + "}\n";
      } else {
        report = "{\"value\": " + format_number(expectile(alpha, d));
        if (alpha >= 0.5) {
          report +=
              ", \"kusuoka\": " + format_number(expectile_kusuoka(alpha, d));
        }
        if (expectile_beta->count() > 0) {
          report += ", \"higher\": " +
                    format_number(higher_order_expectile(alpha, beta, d));
        }
        report += "}\n";
      }
    } else if (dominance_cmd->parsed()) {
      const auto x = load(files[0]);
      const auto y = load(files[1]);
      DominanceVerdict v;
      std::vector<double> levels;
      if (order_spec == "first") {
        v = first_order(x, y);
      } else if (order_spec.rfind("p:", 0) == 0) {
        v = p_order(x, y, parse_real(order_spec.substr(2)));
      } else if (order_spec.rfind("spectral:", 0) == 0) {
        v = spectral_order(x, y,
                           parse_mixture(read_file(order_spec.substr(9))));
      } else if (order_spec == "verify") {
        if (norm_spec.empty()) {
          throw std::runtime_error("--order verify requires --norm");
        }
        const NormSpec n = parse_norm_spec(norm_spec);
        if (use_oracle) {
          v = dense_dominance_sweep(x, y, n, reference_sweep(x, y));
        } else {
          v = verify_dominance(x, y, n);
          levels = critical_levels(x, y, n, 1.0 / 256.0).betas;
        }
      } else {
        throw std::runtime_error("unknown order: " + order_spec);
      }
      report = json_verdict(v, levels);
    } else if (curve->parsed()) {
      const NormSpec n = parse_norm_spec(norm_spec);
      const auto d = load(files[0]);
      report = emit_curve(n, d, parse_level_grid(betas_spec));
    } else if (info->parsed()) {
      const auto d = load(files[0]);
      if (info_format == "json") {
        report = "{\"atoms\": [";
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (i > 0) report += ", ";
          report += "{\"x\": " + format_number(d.value(i), 17) +
                    ", \"p\": " + format_number(d.prob(i), 17) + "}";
        }
        report += "]}\n";
      } else if (info_format == "csv") {
        report = "value,probability\n";
        for (std::size_t i = 0; i < d.size(); ++i) {
          report += format_number(d.value(i), 17) + "," +
                    format_number(d.prob(i), 17) + "\n";
        }
      } else if (info_format.empty()) {
        report = "{\"atoms\": " + std::to_string(d.size()) +
                 ", \"mean\": " + format_number(avar(0.0, d)) +
                 ", \"essinf\": " + format_number(d.value(0)) +
                 ", \"esssup\": " + format_number(d.value(d.size() - 1)) +
                 "}\n";
      } else {
        throw std::runtime_error("unknown format: " + info_format);
      }
    }

    if (out_path.empty()) {
      out << report;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        throw std::runtime_error("cannot write file: " + out_path);
      }
      f << report;
    }
    return 0;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hrisk::cli
