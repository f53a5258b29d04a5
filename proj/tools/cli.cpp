#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "repgrowth/census.hpp"
#include "repgrowth/enumerate.hpp"
#include "repgrowth/errors.hpp"
#include "repgrowth/multiplicity.hpp"
#include "repgrowth/root_system.hpp"
#include "repgrowth/weyl_dim.hpp"
#include "repgrowth/zeta_bounds.hpp"

namespace repgrowth::cli {

namespace {

using nlohmann::ordered_json;

int env_threads() {
  const char* v = std::getenv("REPGROWTH_THREADS");
  if (!v) return 1;
  char* end = nullptr;
  long t = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || t < 1) return 1;
  return static_cast<int>(std::min<long>(t, 256));
}

CVector parse_cvector(const std::string& text) {
  CVector c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse weight entry '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("cannot parse weight entry '" + item + "'");
    c.push_back(v);
  }
  if (c.empty()) throw std::invalid_argument("empty weight vector");
  return c;
}

std::vector<long long> parse_llvector(const std::string& text) {
  std::vector<long long> v;
  for (long long x : parse_cvector(text)) v.push_back(x);
  return v;
}

std::string join_ll(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_int(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

// five significant digits, plain fixed notation (no exponent)
std::string fmt_sig5(double x) {
  if (x == 0.0) return "0.0000";
  int mag = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  double scale = std::pow(10.0, mag - 4);
  double y = std::round(x / scale) * scale;
  int dec = std::max(0, 4 - mag);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", dec, y);
  return buf;
}

ordered_json profile_json(const ExponentProfile& profile) {
  ordered_json j;
  j["id"] = to_string(profile.id);
  std::vector<std::string> vs;
  for (const auto& v : profile.v) vs.push_back(v.str());
  j["v"] = vs;
  return j;
}

ordered_json records_json(RootSystemId id, long long max_dim,
                          const std::vector<IrrepRecord>& records) {
  ordered_json doc;
  doc["id"] = to_string(id);
  doc["max_dim"] = max_dim;
  ordered_json arr = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json r;
    r["c"] = rec.c;
    r["dim"] = rec.dim.str();
    arr.push_back(std::move(r));
  }
  doc["records"] = std::move(arr);
  return doc;
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  ordered_json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
  }
  return doc;
}

std::vector<IrrepRecord> records_from_json(const ordered_json& doc,
                                           RootSystemId id) {
  std::vector<IrrepRecord> records;
  try {
    for (const auto& r : doc.at("records")) {
      IrrepRecord rec;
      rec.c = r.at("c").get<CVector>();
      rec.dim = BigInt(r.at("dim").get<std::string>());
      if (rec.c.size() != static_cast<std::size_t>(id.rank))
        throw std::invalid_argument("record length mismatch");
      records.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed records: ") + e.what());
  }
  return records;
}

ordered_json pair_json(const SimplePair& sp) {
  ordered_json j;
  j["id"] = to_string(sp.id);
  j["c"] = sp.c_orbit;
  j["dim"] = sp.dim;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computations for compact simple Lie groups: root "
               "systems, irreducible degrees, degree-growth checks, weight "
               "diagrams, and pair censuses"};
  app.require_subcommand(1);

  bool json = false;
  std::string id_str, c_str, cochar_str, cache_path, check_path;
  double s_val = 0.0;
  long long n_val = 0, max_dim = 0, order = 0;
  std::size_t cap = 1000000;

  auto* cmd_roots = app.add_subcommand("roots", "root system summary (JSON)");
  cmd_roots->add_option("id", id_str, "root system id, e.g. A2")->required();

  auto* cmd_dim = app.add_subcommand(
      "dim", "irreducible degree at shifted weight c (entries >= 1)");
  cmd_dim->add_option("id", id_str)->required();
  cmd_dim->add_option("c", c_str, "comma-separated shifted weight, e.g. 2,1")
      ->required();
  cmd_dim->add_flag("--json", json);

  auto* cmd_vprofile =
      app.add_subcommand("vprofile", "exact exponent profile v_j");
  cmd_vprofile->add_option("id", id_str)->required();
  cmd_vprofile->add_flag("--json", json);

  auto* cmd_zbound = app.add_subcommand(
      "zbound", "zeta-product upper bound for the degree-zeta function at s");
  cmd_zbound->add_option("id", id_str)->required();
  cmd_zbound->add_option("s", s_val)->required();
  cmd_zbound->add_flag("--json", json);

  auto* cmd_table1 =
      app.add_subcommand("table1", "reference Z(1) table (A9..A20, D5..D10, E6..E8)");
  cmd_table1->add_flag("--json", json);

  auto* cmd_table2 =
      app.add_subcommand("table2", "reference Z(3/4)^4 table (A2..A8, D4)");
  cmd_table2->add_flag("--json", json);

  auto* cmd_enum = app.add_subcommand(
      "enum", "all irreducibles of degree <= max_dim, sorted by degree");
  cmd_enum->add_option("id", id_str);
  cmd_enum->add_option("max_dim", max_dim);
  cmd_enum->add_option("--max-dim", max_dim, "alternative to the positional");
  cmd_enum->add_flag("--json", json);
  cmd_enum->add_option("--cache", cache_path,
                       "JSON cache path (read when present, else written)");
  cmd_enum->add_option("--check", check_path,
                       "verify degrees in a previously written JSON file");

  auto* cmd_rn =
      app.add_subcommand("rn", "number of irreducibles of degree <= n");
  cmd_rn->add_option("id", id_str)->required();
  cmd_rn->add_option("n", n_val)->required();

  auto* cmd_witten = app.add_subcommand(
      "witten", "partial sum of degree^-s over degrees <= max_dim");
  cmd_witten->add_option("id", id_str)->required();
  cmd_witten->add_option("s", s_val)->required();
  cmd_witten->add_option("max_dim", max_dim);
  cmd_witten->add_option("--max-dim", max_dim, "alternative to the positional");
  cmd_witten->add_flag("--json", json);

  auto* cmd_thm1 = app.add_subcommand(
      "verify-thm1",
      "check that at most n irreducibles have degree <= n, for all n <= max_n");
  cmd_thm1->add_option("id", id_str)->required();
  cmd_thm1->add_option("max_n", max_dim);
  cmd_thm1->add_option("--max-n", max_dim, "alternative to the positional");
  cmd_thm1->add_flag("--json", json);

  auto* cmd_weights = app.add_subcommand(
      "weights", "weight diagram with multiplicities and the 1 + dim/h check");
  cmd_weights->add_option("id", id_str)->required();
  cmd_weights->add_option("c", c_str)->required();
  cmd_weights->add_option("--cap", cap, "weight count cap");

  auto* cmd_eig = app.add_subcommand(
      "eig", "eigenspace profile of a regular torus element of finite order");
  cmd_eig->add_option("id", id_str)->required();
  cmd_eig->add_option("c", c_str)->required();
  cmd_eig->add_option("--order", order, "element order")->required();
  cmd_eig->add_option("--cochar", cochar_str,
                      "cocharacter t1,...,tr (default: first regular one)");
  cmd_eig->add_option("--cap", cap, "weight count cap");

  auto* cmd_census = app.add_subcommand(
      "census",
      "isomorphism classes of (semisimple compact group, faithful "
      "irreducible of degree exactly n)");
  cmd_census->add_option("n", n_val)->required();
  bool list_records = false;
  cmd_census->add_flag("--list", list_records, "emit the records as JSON");
  cmd_census->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const int threads = env_threads();
  try {
    if (cmd_roots->parsed()) {
      RootSystemData data = build(parse_root_system_id(id_str));
      ordered_json j;
      j["id"] = to_string(data.id);
      j["rank"] = data.id.rank;
      j["cartan"] = data.cartan;
      j["num_positive"] = data.num_positive;
      j["coxeter_number"] = data.coxeter_number;
      j["weyl_order"] = data.weyl_order.str();
      ordered_json roots = ordered_json::array();
      for (const auto& root : data.positive_roots) roots.push_back(root.coeffs);
      j["positive_roots"] = std::move(roots);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_dim->parsed()) {
      RootSystemId id = parse_root_system_id(id_str);
      CVector c = parse_cvector(c_str);
      BigInt d = dimension(id, c);
      if (json) {
        ordered_json j;
        j["id"] = to_string(id);
        j["c"] = c;
        j["dim"] = d.str();
        out << j.dump(2) << "\n";
      } else {
        out << d.str() << "\n";
      }
      return 0;
    }

    if (cmd_vprofile->parsed()) {
      ExponentProfile profile = v_profile(parse_root_system_id(id_str));
      if (json) {
        out << profile_json(profile).dump(2) << "\n";
      } else {
        for (std::size_t j = 0; j < profile.v.size(); ++j)
          out << (j + 1) << "\t" << profile.v[j].str() << "\n";
      }
      return 0;
    }

    if (cmd_zbound->parsed()) {
      RootSystemId id = parse_root_system_id(id_str);
      double z = z_bound(id, s_val);
      if (json) {
        ordered_json j;
        j["id"] = to_string(id);
        j["s"] = s_val;
        j["value"] = z;
        out << j.dump(2) << "\n";
      } else {
        out << fmt("%.10g", z) << "\n";
      }
      return 0;
    }

    if (cmd_table1->parsed() || cmd_table2->parsed()) {
      bool first = cmd_table1->parsed();
      auto rows = first ? table1() : table2();
      if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
          ordered_json j;
          j["id"] = to_string(row.id);
          j["value"] = row.value;
          j["printed"] =
              first ? fmt("%.4f", row.value) : fmt_sig5(row.value);
          arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& row : rows)
          out << to_string(row.id) << "\t"
              << (first ? fmt("%.4f", row.value) : fmt_sig5(row.value))
              << "\n";
      }
      return 0;
    }

    if (cmd_enum->parsed()) {
      if (!check_path.empty()) {
        ordered_json doc = load_json_file(check_path);
        RootSystemId fid;
        long long fmax = 0;
        try {
          fid = parse_root_system_id(doc.at("id").get<std::string>());
          fmax = doc.at("max_dim").get<long long>();
        } catch (const nlohmann::json::exception& e) {
          throw std::invalid_argument(std::string("malformed file: ") +
                                      e.what());
        }
        if (!id_str.empty() && parse_root_system_id(id_str) != fid)
          throw std::invalid_argument("id does not match the file");
        if ((cmd_enum->count("max_dim") || cmd_enum->count("--max-dim")) &&
            max_dim != fmax)
          throw std::invalid_argument("max_dim does not match the file");
        auto records = records_from_json(doc, fid);
        for (const auto& rec : records) {
          BigInt actual = dimension(fid, rec.c);
          if (actual != rec.dim) {
            out << "mismatch\t" << join_ll(rec.c) << "\tfile=" << rec.dim.str()
                << "\tcomputed=" << actual.str() << "\n";
            return 1;
          }
        }
        out << "ok\t" << records.size() << "\n";
        return 0;
      }

      if (id_str.empty() ||
          (!cmd_enum->count("max_dim") && !cmd_enum->count("--max-dim")))
        throw std::invalid_argument("enum requires <id> <max_dim>");
      RootSystemId id = parse_root_system_id(id_str);
      std::vector<IrrepRecord> records;
      bool from_cache = false;
      if (!cache_path.empty() && std::ifstream(cache_path).good()) {
        ordered_json doc = load_json_file(cache_path);
        RootSystemId fid = parse_root_system_id(
            doc.at("id").get<std::string>());
        long long fmax = doc.at("max_dim").get<long long>();
        if (fid == id && fmax == max_dim) {
          records = records_from_json(doc, id);
          from_cache = true;
        }
      }
      if (!from_cache) {
        records = irreps_up_to(id, max_dim, threads);
        if (!cache_path.empty()) {
          std::ofstream cache(cache_path);
          if (!cache)
            throw std::invalid_argument("cannot write '" + cache_path + "'");
          cache << records_json(id, max_dim, records).dump(2) << "\n";
        }
      }
      if (json) {
        out << records_json(id, max_dim, records).dump(2) << "\n";
      } else {
        for (const auto& rec : records)
          out << join_ll(rec.c) << "\t" << rec.dim.str() << "\n";
      }
      return 0;
    }

    if (cmd_rn->parsed()) {
      out << r_n(parse_root_system_id(id_str), n_val, threads) << "\n";
      return 0;
    }

    if (cmd_witten->parsed()) {
      if (!cmd_witten->count("max_dim") && !cmd_witten->count("--max-dim"))
        throw std::invalid_argument("witten requires max_dim");
      WittenPartial w =
          witten_partial(parse_root_system_id(id_str), s_val, max_dim, threads);
      if (json) {
        ordered_json j;
        j["id"] = id_str;
        j["s"] = w.s;
        j["max_dim"] = w.max_dim;
        j["partial_sum"] = w.partial_sum;
        j["count"] = w.count;
        out << j.dump(2) << "\n";
      } else {
        out << fmt("%.10g", w.s) << "\t" << w.max_dim << "\t"
            << fmt("%.10g", w.partial_sum) << "\t" << w.count << "\n";
      }
      return 0;
    }

    if (cmd_thm1->parsed()) {
      if (!cmd_thm1->count("max_n") && !cmd_thm1->count("--max-n"))
        throw std::invalid_argument("verify-thm1 requires max_n");
      RootSystemId id = parse_root_system_id(id_str);
      Thm1Report report = verify_thm1(id, max_dim, threads);
      if (json) {
        ordered_json j;
        j["id"] = to_string(id);
        j["max_n"] = max_dim;
        j["pass"] = report.pass;
        j["count"] = report.count;
        j["equalities"] = report.equalities;
        if (!report.pass) {
          j["witness_n"] = report.witness_n;
          j["witness_rn"] = report.witness_rn;
        }
        out << j.dump(2) << "\n";
      } else if (report.pass) {
        out << "pass\t" << report.count << "\t"
            << join_ll(report.equalities) << "\n";
      } else {
        out << "fail\tn=" << report.witness_n
            << "\tcount=" << report.witness_rn << "\n";
      }
      return report.pass ? 0 : 1;
    }

    if (cmd_weights->parsed()) {
      RootSystemId id = parse_root_system_id(id_str);
      CVector c = parse_cvector(c_str);
      WeightDiagram diagram = weight_diagram(id, c, cap);
      SeitzReport seitz = seitz_check(id, c, cap);
      ordered_json j;
      j["id"] = to_string(id);
      j["c"] = c;
      j["dim"] = diagram.dim.str();
      j["highest"] = diagram.highest;
      ordered_json mults = ordered_json::array();
      for (const auto& [w, m] : diagram.mults) {
        ordered_json row;
        row["m"] = w;
        row["mult"] = m;
        mults.push_back(std::move(row));
      }
      j["mults"] = std::move(mults);
      j["bound_check"] = {{"max_mult", seitz.max_mult},
                          {"coxeter_number", seitz.coxeter_number},
                          {"bound", seitz.bound},
                          {"pass", seitz.pass}};
      out << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_eig->parsed()) {
      RootSystemId id = parse_root_system_id(id_str);
      CVector c = parse_cvector(c_str);
      TorusElement g;
      if (cochar_str.empty()) {
        g = find_regular_cocharacter(id, order);
      } else {
        g.order = order;
        g.cochar = parse_llvector(cochar_str);
      }
      EigenProfile profile = eigen_profile(id, c, g, cap);
      ordered_json j;
      j["id"] = to_string(id);
      j["c"] = c;
      j["order"] = g.order;
      j["cochar"] = g.cochar;
      j["counts"] = profile.counts;
      j["w_max"] = profile.w_max;
      try {
        EigenBounds bounds = eigenspace_bounds(id, c, g, cap);
        j["bounds"] = {{"lower", bounds.lower.str()},
                       {"lower_value", bounds.lower.convert_to<double>()},
                       {"upper", bounds.upper},
                       {"weyl_term", bounds.weyl_term},
                       {"pass", bounds.pass}};
      } catch (const std::invalid_argument&) {
        j["bounds"] = nullptr;  // composite order: no sandwich
      }
      out << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_census->parsed()) {
      if (n_val < 1) throw std::invalid_argument("n must be >= 1");
      if (list_records) {
        SimplePairTable table(std::max<long long>(n_val, 2));
        auto records = census_list(n_val, table);
        ordered_json j;
        j["n"] = n_val;
        j["count"] = static_cast<long long>(records.size());
        ordered_json arr = ordered_json::array();
        for (const auto& rec : records) {
          ordered_json factors = ordered_json::array();
          for (const auto& sp : rec.factors) factors.push_back(pair_json(sp));
          arr.push_back({{"factors", std::move(factors)}});
        }
        j["records"] = std::move(arr);
        out << j.dump(2) << "\n";
      } else {
        long long count = census_count(n_val);
        if (json) {
          ordered_json j;
          j["n"] = n_val;
          j["count"] = count;
          out << j.dump(2) << "\n";
        } else {
          out << count << "\n";
        }
      }
      return 0;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NoRegularElementError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n\n" << app.help();
  return 2;
}

}  // namespace repgrowth::cli
