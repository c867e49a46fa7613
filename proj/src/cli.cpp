#include "codeg/cli.hpp"

#include "codeg/chartab.hpp"
#include "codeg/invariants.hpp"
#include "codeg/partitions.hpp"
#include "codeg/scans.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <functional>
#include <regex>

namespace codeg {

namespace {

  struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  // "5000000000", "5e9"
  Nat parse_bound(std::string const& s) {
    static std::regex const re("([1-9][0-9]*)(?:e([0-9]{1,3}))?");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("bad number '" + s + "'");
    Nat v(m[1].str());
    if (m[2].matched) v *= ipow(Nat(10), std::stoul(m[2].str()));
    return v;
  }

  unsigned long parse_small(std::string const& s) {
    static std::regex const re("[0-9]{1,9}");
    if (!std::regex_match(s, re)) throw UsageError("bad number '" + s + "'");
    return std::stoul(s);
  }

  using KV = std::vector<std::pair<std::string, std::string>>;

  void emit_kv(std::ostream& out, bool json, KV const& kv) {
    if (json) {
      nlohmann::ordered_json j;
      for (auto const& [k, v] : kv) j[k] = v;
      out << j.dump(2) << "\n";
      return;
    }
    for (auto const& [k, v] : kv) out << k << "\t" << v << "\n";
  }

  int emit(std::ostream& out, bool json, ScanReport const& r) {
    out << (json ? r.to_json() : r.to_tsv());
    switch (r.verdict()) {
      case Verdict::Pass: return 0;
      case Verdict::Fail: return 1;
      default: return 3;
    }
  }

  std::string yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"codegree and simple-group verification toolkit", "codeg"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool json = false, psi_multiset = false;
  std::string max_order_s;
  unsigned max_m = 0, max_rank = 0, threads = default_threads();
  std::uint64_t max_q = 0;
  auto* o_order = app.add_option("--max-order", max_order_s, "order bound (decimal, or like 5e9)");
  auto* o_m = app.add_option("--max-m", max_m, "largest alternating degree m");
  auto* o_q = app.add_option("--max-q", max_q, "largest field size");
  auto* o_rank = app.add_option("--max-rank", max_rank, "largest rank parameter");
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--json", json, "structured output");
  app.add_flag("--psi-multiset", psi_multiset, "second largest order counted with repetition");

  std::vector<std::string> pos, tables;
  bool pseudo = false, multiplicity = false, collisions = false, sporadic_part = false, control = false;

  auto sub = [&](char const* nm, char const* help) {
    auto* s = app.add_subcommand(nm, help);
    s->add_option("args", pos, "positional arguments");
    return s;
  };
  auto* c_order = sub("order", "order of a simple group");
  auto* c_enum = sub("enumerate", "simple groups up to --max-order");
  auto* c_coinc = sub("coincidences", "orders shared by two simple groups");
  auto* c_artin = sub("artin", "Artin invariants of a Lie-type group");
  auto* c_ascan = sub("artin-scan", "definition against generic Artin invariants");
  c_ascan->add_flag("--collisions", collisions, "bucket by (omega, psi) and report same p'-part pairs");
  auto* c_cyclo = sub("cyclo", "cyclotomic factorization of a group order, or Phi_i(q) for `cyclo i q`");
  auto* c_cod = sub("codegrees", "codegrees of a character table file");
  c_cod->add_option("--table", tables, "table file")->required();
  c_cod->add_flag("--pseudo", pseudo, "print the pseudo-algebra as codegree/multiplicity lines");
  auto* c_cmp = sub("compare", "containment of codegree sets");
  c_cmp->add_option("--table", tables, "two table files")->required()->expected(1, 2);
  c_cmp->add_flag("--multiplicity", multiplicity, "compare multiplicities as well");
  auto* c_cert = sub("certify-divides", "codegree containment certificate for a simple table");
  c_cert->add_option("--table", tables, "simple table, then the other table")->required()->expected(1, 2);
  auto* c_bounds = sub("bounds", "upper bound on the largest degree");
  c_bounds->add_option("--table", tables, "table file supplying the exact largest degree");
  auto* c_sand = sub("sandwich", "order sandwich for one group, or the sweep");
  auto* c_dz = sub("defect-zero", "defect-zero characters of A_m: `defect-zero m p` or the scan");
  auto* c_pcore = sub("pcore", "a p-core partition of m");
  auto* c_fscan = sub("f-scan", "largest degrees and f(A_m) along m");
  c_fscan->add_flag("--sporadic", sporadic_part, "sporadic-group checks instead");
  auto* c_mixed = sub("mixed-scan", "alternating against Lie type, both directions");
  auto* c_sep = sub("separation", "Spin against PSp degree separation: `separation n q` or the sweep");
  auto* c_kim = sub("kimmerle", "|S| < (|S|_p')^2 sweep");
  c_kim->add_flag("--control", control, "run the synthetic negative control");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  ScanOptions opt{threads, psi_multiset};
  auto bound = [&](char const* dflt) { return parse_bound(o_order->count() ? max_order_s : std::string(dflt)); };
  auto mm = [&](unsigned d) { return o_m->count() ? max_m : d; };
  auto mq = [&](std::uint64_t d) { return o_q->count() ? max_q : d; };
  auto mr = [&](unsigned d) { return o_rank->count() ? max_rank : d; };
  auto need_pos = [&](size_t lo, size_t hi) {
    if (pos.size() < lo || pos.size() > hi) throw UsageError("wrong number of arguments");
  };
  auto group_arg = [&] {
    if (pos.empty()) throw UsageError("group expected");
    return parse_group(pos);
  };
  auto sweep_groups = [&] {
    std::optional<Nat> mo;
    if (o_order->count()) mo = parse_bound(max_order_s);
    return lie_sweep(mq(9), mr(8), mo);
  };

  try {
    if (*c_order) {
      auto g = group_arg();
      auto o = order(g);
      if (json)
        emit_kv(out, true, {{"group", name(g)}, {"order", o.value().get_str()}, {"factored", o.str()}});
      else
        out << o.value().get_str() << "\n";
      return 0;
    }
    if (*c_enum) {
      need_pos(0, 0);
      auto cat = enumerate_simple_groups(bound("10000"));
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (auto const& e : cat) j.push_back({{"group", name(e.group)}, {"order", e.order.value().get_str()}});
        out << j.dump(2) << "\n";
      } else {
        for (auto const& e : cat) out << name(e.group) << "\t" << e.order.value().get_str() << "\n";
      }
      return 0;
    }
    if (*c_coinc) {
      need_pos(0, 0);
      return emit(out, json, coincidence_search(bound("5000000000")));
    }
    if (*c_artin) {
      auto g = group_arg();
      auto a = artin_invariants(g, psi_multiset);
      auto t = table1_prediction(g);
      emit_kv(out, json,
              {{"group", name(g)},
               {"p", std::to_string(g.p)},
               {"omega", a.omega.get_str()},
               {"psi", a.psi.get_str()},
               {"degenerate", yn(a.degenerate)},
               {"generic", t ? t->omega.get_str() + "," + t->psi.get_str() : "excluded"},
               {"listed_exception", yn(is_listed_exception(g))}});
      return 0;
    }
    if (*c_ascan) {
      need_pos(0, 0);
      auto gs = sweep_groups();
      return emit(out, json, collisions ? artin_collision_scan(gs, opt) : artin_table1_scan(gs, opt));
    }
    if (*c_cyclo) {
      static std::regex const num("[0-9]+");
      if (pos.size() == 2 && std::regex_match(pos[0], num) && std::regex_match(pos[1], num)) {
        auto i = parse_small(pos[0]), q = parse_small(pos[1]);
        if (i < 1 || q < 2) throw UsageError("cyclo i q needs i >= 1 and q >= 2");
        out << cyclotomic_eval(static_cast<unsigned>(i), Nat(q)).get_str() << "\n";
        return 0;
      }
      auto g = group_arg();
      auto f = cyclotomic_factorization(g);
      emit_kv(out, json,
              {{"group", name(g)},
               {"order", order(g).value().get_str()},
               {"d", std::to_string(f.d)},
               {"k", std::to_string(f.k)},
               {"factorization", f.str()}});
      return 0;
    }
    if (*c_cod) {
      need_pos(0, 0);
      auto t = load_table(tables.at(0));
      if (pseudo) {
        auto p = codegree_profile(t);
        if (json) {
          nlohmann::ordered_json j = nlohmann::ordered_json::array();
          for (auto const& [c, m] : p.entries) j.push_back({{"c", c.get_str()}, {"m", m}});
          out << j.dump(2) << "\n";
        } else {
          for (auto const& [c, m] : p.entries) out << c.get_str() << "\t" << m << "\n";
        }
        return 0;
      }
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (auto const& r : t.records)
          j.push_back({{"degree", r.degree.get_str()}, {"kernel", r.kernelOrder.get_str()},
                       {"codegree", t.codegree(r).get_str()}});
        out << j.dump(2) << "\n";
      } else {
        out << "degree\tkernel\tcodegree\n";
        for (auto const& r : t.records)
          out << r.degree.get_str() << "\t" << r.kernelOrder.get_str() << "\t" << t.codegree(r).get_str() << "\n";
      }
      return 0;
    }
    if (*c_cmp) {
      need_pos(0, 0);
      if (tables.size() != 2) throw UsageError("compare needs two --table files");
      auto a = load_table(tables[0]), b = load_table(tables[1]);
      auto pa = codegree_profile(a), pb = codegree_profile(b);
      Nat miss = first_missing_codegree(pa, pb, multiplicity);
      emit_kv(out, json,
              {{"first", a.name},
               {"second", b.name},
               {"subset", yn(miss == 0)},
               {"first_missing", miss == 0 ? "-" : miss.get_str()}});
      return 0;
    }
    if (*c_cert) {
      need_pos(0, 0);
      if (tables.size() != 2) throw UsageError("certify-divides needs two --table files");
      auto sT = load_table(tables[0]), gT = load_table(tables[1]);
      auto c = divisibility_certificate(sT, gT);
      ScanReport r;
      r.scan = "certify-divides";
      r.param("S", sT.name);
      r.param("G", gT.name);
      r.columns = {"codegree", "multiplicity", "witnesses"};
      for (auto const& [cd, m] : codegree_profile(sT).entries) {
        std::string w;
        if (auto it = c.witnesses.find(cd); it != c.witnesses.end())
          for (size_t i = 0; i < it->second.size(); ++i) w += (i ? "," : "") + std::to_string(it->second[i]);
        r.rows.push_back({cd.get_str(), std::to_string(m), w.empty() ? "-" : w});
      }
      r.note("identity: " + c.identity_lhs.get_str() + " = " + c.identity_rhs.get_str());
      if (!c.hypothesis) r.note("first missing codegree: " + c.missing.get_str());
      r.claim("cod(S) contained in cod(G)", c.hypothesis);
      r.claim("sum m_i d_i^2/|S|^2 = (|S|-1)/|S|^2", c.identity_lhs == c.identity_rhs);
      r.claim("|S| divides |G|", c.divides);
      return emit(out, json, r);
    }
    if (*c_bounds) {
      auto g = group_arg();
      auto b = b_upper_bound(g);
      KV kv = {{"group", name(g)},
               {"bound", b.boundFamily},
               {"steinberg", b.steinbergDegree.value().get_str()},
               {"b_upper", b.bUpper.get_str()},
               {"f_lower", b.fLower.get_str()},
               {"f_upper", b.fUpper.get_str()}};
      if (tables.empty()) {
        emit_kv(out, json, kv);
        return 0;
      }
      auto t = load_table(tables[0]);
      if (t.groupOrder.value() != order(g).value()) throw UsageError("table order does not match the group");
      ScanReport r;
      r.scan = "bounds";
      r.columns = {"field", "value"};
      for (auto const& [k, v] : kv) r.rows.push_back({k, v});
      Nat bx = max_degree(t);
      r.rows.push_back({"b_exact", bx.get_str()});
      r.claim("b(S) <= b_upper", bx <= b.bUpper);
      r.claim("St(1) <= b(S)", b.steinbergDegree.value() <= bx);
      return emit(out, json, r);
    }
    if (*c_sand) {
      if (!pos.empty()) return emit(out, json, sandwich_sweep({group_arg()}, opt));
      return emit(out, json, sandwich_sweep(sweep_groups(), opt));
    }
    if (*c_dz) {
      if (pos.empty()) return emit(out, json, defect_zero_scan(mm(45), opt));
      need_pos(2, 2);
      auto m = parse_small(pos[0]), p = parse_small(pos[1]);
      if (m < 5 || m > max_partition_size || !is_prime(Nat(p))) throw UsageError("need 5 <= m <= 60 and p prime");
      KV kv = {{"m", pos[0]}, {"p", pos[1]}, {"defect_zero", yn(alternating_defect_zero(m, p))}};
      if (p == 2 || p == 3) kv.emplace_back("closed_form", yn(defect_zero_closed_form(m, p)));
      emit_kv(out, json, kv);
      return 0;
    }
    if (*c_pcore) {
      need_pos(2, 2);
      auto m = parse_small(pos[0]), p = parse_small(pos[1]);
      if (m < 1 || m > max_partition_size || !is_prime(Nat(p))) throw UsageError("need 1 <= m <= 60 and p prime");
      auto w = p > m ? std::optional<Partition>(Partition({static_cast<unsigned>(m)})) : p_core_witness(m, p);
      emit_kv(out, json, {{"m", pos[0]}, {"p", pos[1]}, {"has_core", yn(w.has_value())}, {"witness", w ? w->str() : "-"}});
      return 0;
    }
    if (*c_fscan) {
      need_pos(0, 0);
      return emit(out, json, sporadic_part ? sporadic_scan() : f_alternating_scan(mm(45), opt));
    }
    if (*c_mixed) {
      need_pos(0, 0);
      return emit(out, json, mixed_case_scan(mm(18), bound("1000000000000"), opt));
    }
    if (*c_sep) {
      if (pos.empty()) return emit(out, json, separation_sweep(mr(10), mq(13)));
      need_pos(2, 2);
      auto x = separation_check(static_cast<unsigned>(parse_small(pos[0])), parse_small(pos[1]));
      ScanReport r;
      r.scan = "separation";
      r.columns = {"n", "q", "alpha", "d_spin", "psp_degree", "witness"};
      r.rows.push_back({pos[0], pos[1], std::to_string(x.alpha), x.d_spin.get_str(), x.psp_degree.get_str(),
                        x.witness.get_str()});
      r.claim("d(Spin_2n+1(q)) > (q^n + alpha)/2", x.separated);
      r.claim("witness degree comparisons", x.witness_below_threshold.value_or(true) && x.witness_distinct.value_or(true) &&
                                                 x.q3_witness_below.value_or(true));
      return emit(out, json, r);
    }
    if (*c_kim) {
      need_pos(0, 0);
      if (control) return emit(out, json, kimmerle_check(kimmerle_negative_control()));
      return emit(out, json, kimmerle_sweep(bound("10000000000"), opt));
    }
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (TableInvariantError const& e) {
    err << "invalid table: " << e.what() << "\n";
    return 2;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace codeg
