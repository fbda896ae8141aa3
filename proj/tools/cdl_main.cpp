// cdl: construct, census, decompose, verify, strip, optimize, ap3,
// epsilon-chain over planar point sets in convex position.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cdl/ap3.hpp"
#include "cdl/caps.hpp"
#include "cdl/census.hpp"
#include "cdl/checks.hpp"
#include "cdl/constructions.hpp"
#include "cdl/point_io.hpp"
#include "cdl/stripping.hpp"

using namespace cdl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput = 2;

PointSetFile load_points(const std::string& path) {
  if (path == "-") return read_point_set(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_point_set(in);
}

template <class F>
int with_instance(const std::string& path, double eps, F&& fn) {
  PointSetFile file = load_points(path);
  if (file.is_exact()) {
    auto inst = ExactInstance::from_points(
        std::get<std::vector<Point>>(file.points));
    return fn(inst);
  }
  auto inst = FloatInstance::from_points(
      std::get<std::vector<FloatPoint>>(file.points), FloatKernel{eps});
  return fn(inst);
}

template <class K>
void print_decompose_csv(const ConvexInstance<K>& inst) {
  auto caps = cap_decomposition(inst);
  for (size_t c = 0; c < caps.size(); ++c)
    std::cout << "# cap " << c << ": start=" << caps[c].endpoint_a()
              << " end=" << caps[c].endpoint_b() << " size=" << caps[c].size()
              << "\n";
  std::cout << "i,j,class,bisector_points,witness_index\n";
  size_t n = inst.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      EdgeClass ec = classify_edge(inst, i, j);
      std::string bis;
      for (size_t b : ec.bisector_points) {
        if (!bis.empty()) bis += ';';
        bis += std::to_string(b);
      }
      std::string wit;
      for (const auto& cap : caps) {
        if (!cap.contains_index(i) || !cap.contains_index(j)) continue;
        auto w = find_witness(cap, inst.offset(cap.endpoint_a(), i),
                              inst.offset(cap.endpoint_a(), j));
        if (w) wit = std::to_string(*w);
        break;
      }
      std::cout << i << ',' << j << ',' << (ec.good ? "good" : "bad") << ','
                << bis << ',' << wit << "\n";
    }
}

template <class K>
void print_decompose_json(const ConvexInstance<K>& inst) {
  auto caps = cap_decomposition(inst);
  nlohmann::ordered_json j;
  j["n"] = inst.size();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& cap : caps) {
    nlohmann::ordered_json cj;
    cj["start"] = cap.endpoint_a();
    cj["end"] = cap.endpoint_b();
    cj["size"] = cap.size();
    cj["witnessed_edges_in_cap"] = witnessed_edges_in_cap(cap);
    cj["witnessed_edges_in_instance"] = witnessed_edges_in_instance(cap);
    arr.push_back(cj);
  }
  j["caps"] = arr;
  j["good_edges"] = good_edge_count(inst);
  std::cout << j.dump(2) << "\n";
}

std::vector<Rational> parse_value_list(const nlohmann::json& arr,
                                       const char* what) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& v : arr) {
    if (v.is_string())
      out.push_back(rational_from_string(v.get<std::string>()));
    else if (v.is_number_integer())
      out.push_back(make_rational(v.get<long long>()));
    else if (v.is_number_float())
      out.push_back(Rational(v.get<double>()));  // doubles are exact binary rationals
    else
      throw std::invalid_argument(std::string(what) + ": unsupported value");
  }
  return out;
}

Ap3Instance load_ap3(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json doc = nlohmann::json::parse(text);
  return Ap3Instance::make(parse_value_list(doc.at("red"), "red"),
                           parse_value_list(doc.at("blue"), "blue"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex distinct-distance lab"};
  app.require_subcommand(1);

  // census
  std::string census_file;
  double census_eps = 1e-9;
  auto* census_cmd = app.add_subcommand("census", "isosceles and distance census");
  census_cmd->add_option("file", census_file, "point-set JSON file or -")
      ->required();
  census_cmd->add_option("--eps", census_eps, "float-backend tolerance");

  // decompose
  std::string dec_file;
  double dec_eps = 1e-9;
  bool dec_json = false, dec_csv = false;
  auto* dec_cmd = app.add_subcommand("decompose", "caps, witnesses, edge table");
  dec_cmd->add_option("file", dec_file, "point-set JSON file or -")->required();
  dec_cmd->add_option("--eps", dec_eps, "float-backend tolerance");
  dec_cmd->add_flag("--json", dec_json, "JSON summary instead of CSV");
  dec_cmd->add_flag("--csv", dec_csv, "CSV edge table (default)");

  // verify
  std::string suite;
  unsigned long long trials = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd
      ->add_option("--suite", suite,
                   "monotone|tech|half-easy|sequence|corollaries|altman|szemeredi")
      ->required();
  verify_cmd->add_option("--trials", trials, "number of trials");
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--threads", threads, "worker cap (0 = auto)");

  // strip
  std::string strip_file, strip_a, strip_d, strip_variant = "final";
  auto* strip_cmd = app.add_subcommand("strip", "run the stripping procedure");
  strip_cmd->add_option("file", strip_file, "point-set JSON file or -")
      ->required();
  strip_cmd->add_option("--a", strip_a, "threshold fraction, e.g. 5/44")
      ->required();
  strip_cmd->add_option("--d", strip_d, "step fraction, e.g. 1/1132")
      ->required();
  strip_cmd->add_option("--variant", strip_variant, "final|conservative");

  // optimize
  unsigned resolution = 64;
  unsigned opt_threads = 0;
  auto* opt_cmd = app.add_subcommand("optimize", "search the (a,d) plane");
  opt_cmd->add_option("--resolution", resolution, "lattice points per axis");
  opt_cmd->add_option("--threads", opt_threads, "worker cap (0 = auto)");

  // construct
  std::string kind;
  unsigned cons_n = 0;
  std::uint64_t cons_seed = 1;
  std::string cons_params;
  auto* cons_cmd = app.add_subcommand("construct", "emit a generated instance");
  cons_cmd->add_option("kind", kind, "ngon|quarter|concyclic|random")->required();
  cons_cmd->add_option("--n", cons_n, "number of points")->required();
  cons_cmd->add_option("--seed", cons_seed, "seed (random only)");
  cons_cmd->add_option("--params", cons_params,
                       "comma list of rationals (concyclic only)");

  // ap3
  auto* ap3_cmd = app.add_subcommand("ap3", "bichromatic progressions");
  ap3_cmd->require_subcommand(1);
  std::string ap3_file;
  auto* ap3_count = ap3_cmd->add_subcommand("count", "count bichromatic 3-APs");
  ap3_count->add_option("file", ap3_file, "{\"red\":[...],\"blue\":[...]} or -")
      ->required();
  unsigned ap3_t = 2;
  long long ap3_bound = 9;
  unsigned ap3_threads = 0;
  auto* ap3_max = ap3_cmd->add_subcommand("max", "exhaustive maximum");
  ap3_max->add_option("--t", ap3_t, "side size")->required();
  ap3_max->add_option("--bound", ap3_bound, "value bound M")->required();
  ap3_max->add_option("--threads", ap3_threads, "worker cap (0 = auto)");
  std::string ap3_embed_file, ap3_scale;
  auto* ap3_embed = ap3_cmd->add_subcommand("embed", "map onto a circular arc");
  ap3_embed->add_option("file", ap3_embed_file, "instance JSON or -")->required();
  ap3_embed->add_option("--scale", ap3_scale, "tan of half step angle, p/q");

  // epsilon-chain
  auto* eps_cmd =
      app.add_subcommand("epsilon-chain", "exact 13/36 improvement margin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*census_cmd) {
      return with_instance(census_file, census_eps, [](const auto& inst) {
        std::cout << census_report_json(census(inst)) << "\n";
        return kExitOk;
      });
    }
    if (*dec_cmd) {
      return with_instance(dec_file, dec_eps, [&](const auto& inst) {
        if (dec_json)
          print_decompose_json(inst);
        else
          print_decompose_csv(inst);
        return kExitOk;
      });
    }
    if (*verify_cmd) {
      CampaignReport r = run_campaign(suite, trials, seed, threads);
      std::cout << campaign_report_json(r) << "\n";
      return r.violations == 0 ? kExitOk : kExitViolated;
    }
    if (*strip_cmd) {
      PointSetFile file = load_points(strip_file);
      if (!file.is_exact())
        throw std::invalid_argument("strip: exact-backend input required");
      auto inst =
          ExactInstance::from_points(std::get<std::vector<Point>>(file.points));
      Rational a = rational_from_string(strip_a);
      Rational d = rational_from_string(strip_d);
      Case1Variant variant = strip_variant == "conservative"
                                 ? Case1Variant::Conservative
                                 : Case1Variant::Final;
      StripTrace trace = strip_procedure(inst, a, d);
      nlohmann::ordered_json j;
      j["trace"] = nlohmann::ordered_json::parse(strip_trace_json(trace));
      j["bound"] =
          nlohmann::ordered_json::parse(bound_report_json(bound_report(a, d, variant)));
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (*opt_cmd) {
      std::cout << optimize_result_json(optimize_parameters(resolution, opt_threads))
                << "\n";
      return kExitOk;
    }
    if (*cons_cmd) {
      if (kind == "ngon") {
        std::cout << write_point_set(regular_ngon(cons_n).points()) << "\n";
      } else if (kind == "quarter") {
        std::cout << write_point_set(quarter_arc_with_center(cons_n).points())
                  << "\n";
      } else if (kind == "concyclic") {
        std::vector<Rational> params;
        if (!cons_params.empty()) {
          std::stringstream ss(cons_params);
          std::string tok;
          while (std::getline(ss, tok, ',')) params.push_back(rational_from_string(tok));
        } else {
          for (unsigned k = 0; k < cons_n; ++k)
            params.push_back(make_rational(2LL * k - cons_n + 1, 2));
        }
        std::cout << write_point_set(rational_concyclic(params).points()) << "\n";
      } else if (kind == "random") {
        std::cout << write_point_set(random_convex(cons_n, cons_seed).points())
                  << "\n";
      } else {
        throw std::invalid_argument("construct: unknown kind " + kind);
      }
      return kExitOk;
    }
    if (*ap3_cmd) {
      if (*ap3_count) {
        Ap3Instance inst = load_ap3(ap3_file);
        nlohmann::ordered_json j;
        j["t"] = inst.t();
        j["count"] = count_bichromatic_ap3(inst);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
      }
      if (*ap3_max) {
        Ap3SearchResult r = max_bichromatic_ap3(ap3_t, ap3_bound, ap3_threads);
        nlohmann::ordered_json j;
        j["t"] = ap3_t;
        j["bound"] = ap3_bound;
        j["best"] = r.best;
        j["red"] = r.red;
        j["blue"] = r.blue;
        j["straddling_upper_bound"] = (7ull * ap3_t * ap3_t + ap3_t) / 8;
        j["asymptotic_three_fifths"] = 3.0 * ap3_t * ap3_t / 5.0;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
      }
      if (*ap3_embed) {
        Ap3Instance inst = load_ap3(ap3_embed_file);
        std::optional<Rational> scale;
        if (!ap3_scale.empty()) scale = rational_from_string(ap3_scale);
        ArcEmbedding emb = arc_embedding(inst, scale);
        unsigned long long ap_count = count_bichromatic_ap3(inst);
        auto cap = emb.cap();
        size_t straddling = straddling_witnessed_edges(cap, emb.split);
        nlohmann::ordered_json j;
        j["t"] = inst.t();
        j["scale"] = to_string(emb.scale);
        j["ap3_count"] = ap_count;
        j["straddling_witnessed_edges"] = straddling;
        j["equal"] = ap_count == straddling;
        std::cout << j.dump(2) << "\n";
        return ap_count == straddling ? kExitOk : kExitViolated;
      }
    }
    if (*eps_cmd) {
      EpsilonChain c = epsilon_chain();
      std::cout << "alpha=" << to_string(c.alpha)
                << ", coeff=" << to_string(c.coefficient)
                << ", excess=" << to_string(c.excess) << "\n";
      return kExitOk;
    }
  } catch (const internal_error& e) {
    std::cerr << "VIOLATED: " << e.what() << "\n";
    return kExitViolated;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
