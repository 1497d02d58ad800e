#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xkraw/structure.hpp"
#include "xkraw/suites.hpp"

namespace {

using nlohmann::json;
using namespace xkraw;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitConfigError = 2;

// "3" or "0..5" -> list of indices
std::vector<long> parse_index_list(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) return {std::stol(s)};
    const long lo = std::stol(s.substr(0, dots));
    const long hi = std::stol(s.substr(dots + 2));
    if (hi < lo) throw InvalidParam("empty index range: " + s);
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

// "7/2", "-3", or integer range "-3..6" -> list of rationals
std::vector<Rational> parse_rational_list(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) return {Rational::parse(s)};
    std::vector<Rational> out;
    for (long v : parse_index_list(s)) out.push_back(Rational(v));
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw InvalidParam("cannot open output file: " + out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

std::string render_report(Report rep, const std::string& format) {
    rep.sort();
    if (format == "json") return rep.to_json().dump(2);
    if (format == "csv") return rep.to_csv();
    return rep.to_text();
}

int finish_report(const Report& rep, const std::string& format, const std::string& out_path) {
    emit(render_report(rep, format), out_path);
    return rep.ok() ? kExitOk : kExitIdentityFailure;
}

struct TableRow {
    std::string n;
    Polynomial poly;
};

// Coefficient table emission shared by kraw/xkraw.
std::string render_table(const std::string& command, const json& header,
                         const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "json") {
        json items = json::array();
        for (const TableRow& r : rows)
            items.push_back({{"n", r.n}, {"degree", r.poly.degree()},
                             {"coeffs", r.poly.coeff_strings()}, {"str", r.poly.str()}});
        json out = header;
        out["command"] = command;
        out["items"] = items;
        return out.dump(2);
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "n,k,coeff\n";
        for (const TableRow& r : rows) {
            const auto cs = r.poly.coeff_strings();
            for (std::size_t k = 0; k < cs.size(); ++k)
                os << r.n << "," << k << "," << cs[k] << "\n";
        }
        return os.str();
    }
    std::ostringstream os;
    for (const TableRow& r : rows) {
        os << command << " n=" << r.n << ": " << r.poly.str() << "\n  coeffs: [";
        const auto cs = r.poly.coeff_strings();
        for (std::size_t k = 0; k < cs.size(); ++k) os << (k ? ", " : "") << cs[k];
        os << "]\n";
    }
    return os.str();
}

struct CommonOpts {
    std::string p = "1/2";
    long N = 5;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "parameter p as an exact fraction a/b")->capture_default_str();
    cmd->add_option("--N", o.N, "grid size N")->capture_default_str();
    cmd->add_option("--format", o.format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write output to this path instead of stdout");
}

int cmd_kraw(const CommonOpts& o, const std::string& n_arg, const std::string& a_arg) {
    const Rational p = Rational::parse(o.p);
    const Rational a = a_arg.empty() ? Rational(KrawtchoukParams(p, o.N).N) : Rational::parse(a_arg);
    std::vector<TableRow> rows;
    for (long n : parse_index_list(n_arg)) {
        if (n < 0) throw InvalidParam("kraw: n must be >= 0");
        rows.push_back({std::to_string(n), krawtchouk(n, p, a)});
    }
    emit(render_table("kraw", {{"p", p.str()}, {"a", a.str()}}, rows, o.format), o.out);
    return kExitOk;
}

int cmd_xkraw(const CommonOpts& o, int j, long d, const std::string& n_arg) {
    const KrawtchoukParams prm(Rational::parse(o.p), o.N);
    std::vector<TableRow> rows;
    const std::vector<long> requested = parse_index_list(n_arg);
    const bool single = requested.size() == 1;
    for (long n : requested) {
        // ranges silently skip the gaps in the index set; an explicit single
        // index surfaces the error instead
        if (!in_index_set(j, d, n)) {
            if (single)
                throw InvalidParam("xkraw: n = " + std::to_string(n) + " is outside the index set");
            continue;
        }
        rows.push_back({std::to_string(n), xk_member(j, d, n, prm)});
    }
    emit(render_table("xkraw",
                      {{"p", prm.p.str()}, {"N", prm.N}, {"j", j}, {"d", d}}, rows, o.format),
         o.out);
    return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::vector<std::string>& p_args,
               const std::vector<long>& N_args, const std::vector<std::string>& suites, int j,
               long d, long d_max, long n_max, int jobs, bool inject_fault) {
    SweepConfig cfg;
    if (!p_args.empty()) {
        cfg.ps.clear();
        for (const std::string& s : p_args) cfg.ps.push_back(Rational::parse(s));
    }
    if (!N_args.empty()) cfg.Ns = N_args;
    for (const Rational& p : cfg.ps) {
        for (long N : cfg.Ns) (void)KrawtchoukParams(p, N);  // validate early
    }
    cfg.j = j;
    cfg.d = d;
    cfg.d_max = d_max;
    cfg.n_max = n_max;
    cfg.inject_eta_fault = inject_fault;
    std::vector<std::string> run = suites.empty() ? suite_names() : suites;
    Report all;
    all.suite = run.size() == 1 ? run.front() : "all";
    for (const std::string& name : run) all.merge(run_suite(name, cfg, jobs));
    return finish_report(all, o.format, o.out);
}

int cmd_recurrence(const CommonOpts& o, int j, long d, const std::string& n_arg,
                   const std::string& method) {
    const KrawtchoukParams prm(Rational::parse(o.p), o.N);
    const DarbouxSeed seed(j, d, prm);
    const bool is22 = (j == 2 && d == 2 && prm.N >= 3);
    // the (2,2) table is compared against its published closed forms, which
    // are stated for q_3 = K_3(x-N;p,-N-1) - K_3(-1-N;p,-N-1)
    Polynomial q_pi = minimal_q_pi(j, d, prm);
    if (is22) q_pi = q_pi - Polynomial(q_pi.eval(Rational(-1)));

    struct Row {
        long n = 0;
        long ell = 0;
        Rational value;
        bool has_closed = false;
        Rational closed;
        bool match = true;
    };
    std::vector<Row> rows;
    bool all_match = true;
    const std::vector<long> requested = parse_index_list(n_arg);
    const bool single = requested.size() == 1;
    for (long n : requested) {
        // ranges silently skip indices with no member / outside the method's
        // domain; an explicit single index surfaces the error instead
        if (!in_index_set(j, d, n)) {
            if (single)
                throw InvalidParam("recurrence: no member at n = " + std::to_string(n));
            continue;
        }
        const bool isolated = is_special_index(j, d, n, prm.N);
        if (method == "operator" && isolated && !single) continue;
        std::map<long, Rational> c;
        if (method == "operator")
            c = recurrence_coefficients_operator_method(seed, n, q_pi);
        else
            c = recurrence_coefficients(seed, n, q_pi);
        if (method == "both" && !isolated) {
            // cross-method agreement wherever the operator route is defined
            const std::map<long, Rational> oc = recurrence_coefficients_operator_method(seed, n, q_pi);
            std::map<long, Rational> direct_live = c;
            for (auto it = direct_live.begin(); it != direct_live.end();)
                it = nu_tilde(j, d, it->first, prm.N).is_zero() ? direct_live.erase(it)
                                                                : std::next(it);
            if (direct_live != oc) all_match = false;
        }
        // closed forms are stated for the orthogonality set {0..N, N+d+1}
        std::map<long, Rational> closed;
        const bool row22 = is22 && (n <= prm.N || isolated);
        if (row22) closed = xkraw22_expected_coeffs(n, prm);
        // emit the union of computed and closed-form indices
        std::map<long, Rational> keys = c;
        for (const auto& [l, v] : closed) keys.emplace(l, Rational(0));
        for (const auto& [l, unused] : keys) {
            (void)unused;
            Row r;
            r.n = n;
            r.ell = l;
            r.value = c.count(l) ? c.at(l) : Rational(0);
            if (row22) {
                r.has_closed = true;
                r.closed = closed.count(l) ? closed.at(l) : Rational(0);
                r.match = (r.value == r.closed);
                if (!r.match) all_match = false;
            }
            rows.push_back(r);
        }
    }

    std::string text;
    if (o.format == "json") {
        json items = json::array();
        for (const Row& r : rows) {
            json e = {{"j", j}, {"d", d}, {"n", r.n}, {"ell", r.ell}, {"value", r.value.str()}};
            if (r.has_closed) {
                e["closed"] = r.closed.str();
                e["match"] = r.match;
            }
            items.push_back(e);
        }
        text = json{{"command", "recurrence"}, {"p", prm.p.str()}, {"N", prm.N},
                    {"q_pi", q_pi.str()}, {"items", items}}
                   .dump(2);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "j,d,n,ell,value";
        if (is22) os << ",closed,match";
        os << "\n";
        for (const Row& r : rows) {
            os << j << "," << d << "," << r.n << "," << r.ell << "," << r.value.str();
            if (r.has_closed) os << "," << r.closed.str() << "," << (r.match ? "match" : "MISMATCH");
            os << "\n";
        }
        text = os.str();
    } else {
        std::ostringstream os;
        os << "q_pi = " << q_pi.str() << "\n";
        for (const Row& r : rows) {
            os << "c[" << r.n << "," << r.ell << "] = " << r.value.str();
            if (r.has_closed)
                os << (r.match ? "  (matches closed form)" : "  (closed form: " + r.closed.str() + " MISMATCH)");
            os << "\n";
        }
        text = os.str();
    }
    emit(text, o.out);
    return all_match ? kExitOk : kExitIdentityFailure;
}

int cmd_resultant(const CommonOpts& o, const std::vector<std::string>& a_args, long n_max) {
    const Rational p = Rational::parse(o.p);
    if (p <= Rational(0) || p >= Rational(1)) throw InvalidParam("resultant: need 0 < p < 1");
    std::vector<Rational> as;
    if (a_args.empty()) {
        for (long v = -3; v <= 6; ++v) as.push_back(Rational(v));
        as.push_back(Rational(7, 2));
    } else {
        for (const std::string& s : a_args)
            for (const Rational& r : parse_rational_list(s)) as.push_back(r);
    }
    return finish_report(resultant_lemma_check(p, as, n_max), o.format, o.out);
}

int cmd_family22(const CommonOpts& o) {
    const KrawtchoukParams prm(Rational::parse(o.p), o.N);
    return finish_report(xkraw22_family(prm), o.format, o.out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Krawtchouk / X-Krawtchouk construction and verification"};
    app.require_subcommand(1);

    CommonOpts kraw_o;
    std::string kraw_n = "0..5";
    std::string kraw_a;
    CLI::App* kraw_cmd = app.add_subcommand("kraw", "classical Krawtchouk coefficient tables");
    add_common(kraw_cmd, kraw_o);
    kraw_cmd->add_option("--n", kraw_n, "degree or range lo..hi")->capture_default_str();
    kraw_cmd->add_option("--a", kraw_a, "degree parameter a (defaults to N)");

    CommonOpts xk_o;
    int xk_j = 1;
    long xk_d = 0;
    std::string xk_n = "0..5";
    CLI::App* xk_cmd = app.add_subcommand("xkraw", "X-Krawtchouk coefficient tables");
    add_common(xk_cmd, xk_o);
    xk_cmd->add_option("--j", xk_j, "family type 1..4")->check(CLI::Range(1, 4))->capture_default_str();
    xk_cmd->add_option("--d", xk_d, "Darboux depth d >= 0")->capture_default_str();
    xk_cmd->add_option("--n", xk_n, "member index or range lo..hi")->capture_default_str();

    CommonOpts v_o;
    v_o.format = "json";
    std::vector<std::string> v_ps;
    std::vector<long> v_Ns;
    std::vector<std::string> v_suites;
    int v_j = 0;
    long v_d = -1;
    long v_dmax = 3;
    long v_nmax = 8;
    int v_jobs = 1;
    bool v_fault = false;
    CLI::App* v_cmd = app.add_subcommand("verify", "run identity verification suites");
    v_cmd->add_option("--p", v_ps, "parameter p (repeatable; default 1/3 1/2 3/5)");
    v_cmd->add_option("--N", v_Ns, "grid size N (repeatable; default 2 3 4 5)");
    v_cmd->add_option("--suite", v_suites,
                      "suite name (repeatable): symmetries|factorization|eigen|orthogonality|diophantine");
    v_cmd->add_option("--j", v_j, "restrict to one family type 1..4 (0 = all)")->check(CLI::Range(0, 4));
    v_cmd->add_option("--d", v_d, "restrict to one depth (-1 = all up to --d-max)");
    v_cmd->add_option("--d-max", v_dmax, "depth sweep bound")->capture_default_str();
    v_cmd->add_option("--n-max", v_nmax, "member index sweep bound")->capture_default_str();
    v_cmd->add_option("--jobs", v_jobs, "worker threads (1 = serial reference)")->capture_default_str();
    v_cmd->add_option("--format", v_o.format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    v_cmd->add_option("--out", v_o.out, "write the report to this path");
    v_cmd->add_flag("--inject-fault", v_fault, "test hook: flip one eta sign")->group("");

    CommonOpts r_o;
    int r_j = 2;
    long r_d = 2;
    std::string r_n = "0..5";
    std::string r_method = "direct";
    CLI::App* r_cmd = app.add_subcommand("recurrence", "extract (2d+3)-term recurrence coefficients");
    add_common(r_cmd, r_o);
    r_cmd->add_option("--j", r_j, "family type 1..4")->check(CLI::Range(1, 4))->capture_default_str();
    r_cmd->add_option("--d", r_d, "Darboux depth d >= 0")->capture_default_str();
    r_cmd->add_option("--n", r_n, "member index or range lo..hi")->capture_default_str();
    r_cmd->add_option("--method", r_method, "direct|operator|both")
        ->check(CLI::IsMember({"direct", "operator", "both"}))
        ->capture_default_str();

    CommonOpts res_o;
    res_o.p = "1/3";
    std::vector<std::string> res_as;
    long res_nmax = 5;
    CLI::App* res_cmd = app.add_subcommand("resultant", "verify the resultant lemma and corollary");
    res_cmd->add_option("--p", res_o.p, "parameter p as an exact fraction")->capture_default_str();
    res_cmd->add_option("--a", res_as, "degree parameter (rational or range, repeatable; default -3..6 and 7/2)");
    res_cmd->add_option("--n-max", res_nmax, "largest degree n")->capture_default_str();
    res_cmd->add_option("--format", res_o.format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    res_cmd->add_option("--out", res_o.out, "write the report to this path");

    CommonOpts f_o;
    f_o.N = 3;
    CLI::App* f_cmd = app.add_subcommand("family22", "full check of the explicit (2,2) family");
    add_common(f_cmd, f_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (kraw_cmd->parsed()) return cmd_kraw(kraw_o, kraw_n, kraw_a);
        if (xk_cmd->parsed()) return cmd_xkraw(xk_o, xk_j, xk_d, xk_n);
        if (v_cmd->parsed())
            return cmd_verify(v_o, v_ps, v_Ns, v_suites, v_j, v_d, v_dmax, v_nmax, v_jobs, v_fault);
        if (r_cmd->parsed()) return cmd_recurrence(r_o, r_j, r_d, r_n, r_method);
        if (res_cmd->parsed()) return cmd_resultant(res_o, res_as, res_nmax);
        if (f_cmd->parsed()) return cmd_family22(f_o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
