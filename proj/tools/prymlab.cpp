#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "prymlab/casefive.hpp"
#include "prymlab/error.hpp"
#include "prymlab/json_io.hpp"
#include "prymlab/morphism.hpp"
#include "prymlab/numerics.hpp"
#include "prymlab/painleve.hpp"
#include "prymlab/prym.hpp"
#include "prymlab/verify.hpp"

using namespace prymlab;

namespace {

constexpr int kInvariantExit = 2;
constexpr int kInputExit = 3;

std::string out_path;

void emit(const json& j) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw InputError("cannot write " + out_path);
  os << text;
}

Subset parse_subset(const std::string& s) {
  Subset A;
  if (s.empty() || s == "[]") return A;
  std::string body = s;
  if (body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  for (const auto& q : parse_rational_list(body)) {
    if (q.get_den() != 1) throw InputError("subset entries must be integers");
    A.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return A;
}

json series_json(const LaurentSeries& s) {
  json c = json::array();
  for (int e = -1; e <= s.prec(); ++e) c.push_back(to_string(s.coef(e)));
  return json{{"from", -1}, {"through", s.prec()}, {"coefficients", c}};
}

json point_json(const ProjectivePoint9& p) {
  return to_json_list(std::vector<Rational>(p.coords().begin(), p.coords().end()));
}

BracketTable table_for(const std::string& space, int g, const UPoly<Rational>& ph) {
  if (space == "toda-linear") return toda_table(TodaBracket::Linear, g);
  if (space == "toda-quadratic") return toda_table(TodaBracket::Quadratic, g);
  if (space == "toda-pencil") return toda_pencil(g, ph);
  if (space == "km") return toda_table(TodaBracket::KM, g);
  if (space == "quad-mumford") return quad_mumford_bracket(g, ph);
  Flavor f = parse_flavor(space);
  if (is_prym(f)) return dirac_reduce(f, g, ph);
  return mumford_bracket_table(f, g, ph);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prymlab: Mumford, Prym, Toda and KM systems in exact arithmetic"};
  app.require_subcommand(1);
  app.add_option("-o,--output", out_path, "write the JSON artifact here instead of stdout");
  std::uint64_t seed = 20240501;
  app.add_option("--seed", seed, "seed for random sampling");

  int n = 0;
  auto* sigma = app.add_subcommand("sigma", "subsets of Z/n whose cyclic runs all have even length");
  sigma->add_option("n", n)->required();

  auto* indicial = app.add_subcommand("indicial", "solutions of the indicial equation");
  indicial->add_option("n", n)->required();

  std::string A_text;
  auto* kow = app.add_subcommand("kowalevski", "Kowalevski matrix and spectrum of a balance");
  kow->add_option("n", n)->required();
  kow->add_option("--A", A_text, "subset, e.g. 1,2")->required();

  std::string params_text = "{}";
  int order = 6;
  auto* bal = app.add_subcommand("balance", "Laurent solution of the KM system");
  bal->add_option("n", n)->required();
  bal->add_option("--A", A_text, "subset, e.g. 1,2")->required();
  bal->add_option("--params", params_text, "JSON object slot -> value, e.g. {\"a2_1\": \"1\"}");
  bal->add_option("--order", order, "number of coefficients after the leading one");

  std::string point_text;
  int m = 0;
  auto* phi_cmd = app.add_subcommand("phi", "the map from T_n to the even Mumford space");
  phi_cmd->add_option("--point", point_text, "Toda point JSON (inline or file)")->required();
  phi_cmd->add_option("--m", m)->required();

  std::string triple_text;
  auto* inv = app.add_subcommand("phi-inverse", "reconstruct the Toda point from (u, v, w)");
  inv->add_option("--triple", triple_text, "triple JSON (inline or file)")->required();
  inv->add_option("--n", n)->required();

  std::string space, phi_text = "1";
  int g = 1;
  auto* br = app.add_subcommand("bracket", "symbolic bracket table");
  br->add_option("--space", space,
                 "odd-mumford, even-mumford, odd-prym, even-prym, toda-linear, toda-quadratic, toda-pencil, km, "
                 "quad-mumford")
      ->required();
  br->add_option("--phi", phi_text, "polynomial, ascending coefficients");
  br->add_option("--g", g, "genus (Mumford), n (Prym, Toda, KM, quad-mumford)");

  std::string system, csv_path;
  int index = 1;
  std::string y_text = "0";
  double t_end = 1, step = 1e-3;
  int every = 1;
  auto* flow = app.add_subcommand("flow", "integrate a flow and monitor first integrals");
  flow->add_option("--system", system, "km, toda, mumford, prym")->required();
  flow->add_option("--point", point_text, "Toda point or triple JSON (inline or file)")->required();
  flow->add_option("--index", index, "hierarchy index (toda)");
  flow->add_option("--y", y_text, "Lax parameter (mumford, prym)");
  flow->add_option("--t", t_end)->required();
  flow->add_option("--step", step)->required();
  flow->add_option("--record-every", every);
  flow->add_option("--csv", csv_path, "write the trajectory as CSV here");

  std::string k_text = "3", l_text = "7/2";
  auto* ex5 = app.add_subcommand("example5", "the n = 5 curves, points and incidence");
  ex5->add_option("--k", k_text);
  ex5->add_option("--l", l_text);

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "run acceptance suites");
  ver->add_option("--suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
    return kInputExit;
  }

  try {
    if (*sigma) {
      auto s = sigma_enum(n);
      emit(json{{"n", n}, {"count", s.size()}, {"subsets", s}});
    } else if (*indicial) {
      json list = json::array();
      for (const auto& b : indicial_solutions(n)) list.push_back(to_json(b));
      emit(json{{"n", n}, {"balances", list}});
    } else if (*kow) {
      auto rep = kowalevski(n, parse_subset(A_text));
      json j = to_json(rep);
      if (!j["float_check"]["ok"].get<bool>())
        throw InvariantViolation("floating cross-check", "spectrum deviates by " + j["float_check"]["max_deviation"].get<std::string>());
      emit(j);
    } else if (*bal) {
      Balance b = make_balance(n, parse_subset(A_text));
      json pj = load_json_arg(params_text);
      if (!pj.is_object()) throw InputError("--params must be a JSON object");
      std::map<std::string, Rational> params;
      for (const auto& [key, v] : pj.items())
        params[key] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
      auto a = laurent_balance(b, params, order);
      json series = json::array();
      for (const auto& s : a) series.push_back(series_json(s));
      int through = order - 2;
      for (const auto& r : km_residual(a))
        for (int e = -2; e <= through; ++e)
          if (sgn(r.coef(e)) != 0) throw InvariantViolation("KM residual", "nonzero at t^" + std::to_string(e));
      json j = to_json(b);
      j["free_slots"] = free_slots(b, order);
      j["series"] = series;
      j["residual_zero_through"] = through;
      emit(j);
    } else if (*phi_cmd) {
      TodaPointQ p = toda_from_json(load_json_arg(point_text));
      auto img = phi(p, m);
      if (!(img.u * img.w + img.v * img.v == img.p * img.p - UPoly<Rational>::constant(4)))
        throw InvariantViolation("fiber identity", "u w + v^2 != p^2 - 4");
      json j = to_json(img);
      Triple t = is_km(p) ? phi_prym_triple(img, p.n()) : phi_triple(img, p.n());
      j["flavor"] = to_string(t.flavor);
      j[is_prym(t.flavor) ? "n" : "g"] = t.g;
      emit(j);
    } else if (*inv) {
      Triple t = triple_from_json(load_json_arg(triple_text));
      emit(to_json(phi_inverse(t.u, t.v, t.w, n)));
    } else if (*br) {
      BracketTable t = table_for(space, g, parse_poly(phi_text));
      json j;
      t.to_json(j);
      j["space"] = space;
      j["phi"] = phi_text;
      j["jacobi"] = t.jacobi();
      emit(j);
    } else if (*flow) {
      Integration cfg;
      cfg.t_end = t_end;
      cfg.step = step;
      cfg.record_every = every;
      System s = parse_system(system);
      json pj = load_json_arg(point_text);
      Trajectory tr;
      if (s == System::KM || s == System::Toda) {
        TodaPointQ p = toda_from_json(pj);
        if (s == System::KM && !is_km(p)) throw InputError("km flow needs b = 0");
        tr = s == System::KM ? integrate_km(p.a, cfg) : integrate_toda(p, index, cfg);
      } else {
        Triple t = triple_from_json(pj);
        if (is_prym(t.flavor) != (s == System::Prym)) throw InputError("flavor does not match --system " + system);
        tr = integrate_mumford(t, parse_rational(y_text).get_d(), cfg);
      }
      if (!csv_path.empty()) {
        if (csv_path == "-") {
          tr.write_csv(std::cout);
        } else {
          std::ofstream os(csv_path);
          if (!os) throw InputError("cannot write " + csv_path);
          tr.write_csv(os);
        }
      }
      if (csv_path != "-") emit(tr.summary());
      if (tr.truncated) return kInvariantExit;
    } else if (*ex5) {
      Rational k = parse_rational(k_text), l = parse_rational(l_text);
      auto curves = quotient_curves(fiber_curve_5(k, l), 5);
      auto pts = divisor_points_5(k, l);
      auto inc = incidence_matrix(k, l);
      json points = json::array(), incidence = json::array(), charts = json::array();
      for (const auto& p : pts) points.push_back(point_json(p));
      for (int i = 0; i < 5; ++i) {
        incidence.push_back(std::vector<int>(inc[i].begin(), inc[i].end()));
        json row = json::object();
        for (char c : {'a', 'b', 'c'}) {
          auto lim = chart_limit(i + 1, c, k, l);
          int hit = 0;
          for (int j = 0; j < 5; ++j)
            if (lim == pts[j]) hit = j + 1;
          row[std::string(1, c)] = hit ? "p" + std::to_string(hit) : lim.to_string();
        }
        charts.push_back(row);
      }
      // Balance limits at (beta, delta) = (1, 1): l follows from k through the
      // constraint, so it is reported next to them.
      PrincipalParams pp = principal_params(1, 1, k);
      json limits = json::array();
      for (int s = 0; s < 5; ++s) {
        auto a = laurent_balance(principal_balance_5(s), principal_slots(s, pp), 6);
        auto lim = balance_to_divisor(a);
        bool on = lim == gamma_param(s + 1, pp.beta, pp.delta, k, pp.l);
        limits.push_back(json{{"shift", s}, {"curve", "Gamma" + std::to_string(s + 1)}, {"limit", point_json(lim)}, {"on_curve", on}});
        if (!on) throw InvariantViolation("balance limit", "shift " + std::to_string(s) + " misses its curve");
      }
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          if (inc[i][j] != (j == i || j == (i + 1) % 5 || j == (i + 4) % 5))
            throw InvariantViolation("5_3 configuration", "unexpected incidence");
      emit(json{{"k", to_string(k)},
                {"l", to_string(l)},
                {"spectral_poly", to_string(spectral_poly_5(k, l))},
                {"gamma_sigma", to_string(curves.sigma)},
                {"gamma_tau", to_string(curves.tau)},
                {"points", points},
                {"incidence", incidence},
                {"chart_limits", charts},
                {"balance_limits", json{{"beta", "1"}, {"delta", "1"}, {"l", to_string(pp.l)}, {"shifts", limits}}}});
    } else if (*ver) {
      auto res = run_suite(suite, seed);
      json list = json::array();
      bool ok = true;
      for (const auto& r : res) {
        list.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        ok = ok && r.pass;
      }
      emit(json{{"suite", suite}, {"seed", seed}, {"results", list}, {"pass", ok}});
      return ok ? 0 : kInvariantExit;
    }
  } catch (const InvariantViolation& e) {
    std::cout << json{{"error", "invariant"}, {"invariant", e.invariant()}, {"message", e.what()}}.dump(2) << "\n";
    return kInvariantExit;
  } catch (const InputError& e) {
    std::cout << json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
    return kInputExit;
  } catch (const nlohmann::json::exception& e) {
    std::cout << json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
    return kInputExit;
  } catch (const std::out_of_range& e) {
    std::cout << json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
    return kInputExit;
  }
  return 0;
}
