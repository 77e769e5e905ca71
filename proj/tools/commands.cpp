#include "commands.hpp"

#include "favor7/algebra.hpp"
#include "favor7/amiable.hpp"
#include "favor7/conductor.hpp"
#include "favor7/favorable.hpp"
#include "favor7/honda.hpp"
#include "favor7/localcft.hpp"
#include "favor7/parabolic.hpp"
#include "favor7/records.hpp"
#include "favor7/resolvent.hpp"
#include "favor7/selftest.hpp"

#include <openssl/crypto.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace favor7::cli {

namespace {

constexpr char const* program_version = "favor7 1.0.0";

using Clock = std::chrono::steady_clock;

Json versions()
{
    return Json{{"program", program_version}, {"gmp", gmp_version}, {"openssl", OpenSSL_version(OPENSSL_VERSION)}};
}

/* sidecar manifest next to each written output */
struct Manifest {
    std::string subcommand;
    Json config = Json::object();
    Json inputs = Json::object();
    Json outputs = Json::object();
    Clock::time_point start = Clock::now();

    void input(std::string const& path)
    {
        inputs[path] = sha256_hex(read_file(path));
    }
    void output(std::string const& path, std::string const& data) { outputs[path] = sha256_hex(data); }
    void write(std::string const& path) const
    {
        Json j;
        j["subcommand"] = subcommand;
        j["config"] = config;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
        j["versions"] = versions();
        if (char const* p = std::getenv("FAVOR7_PRECISION"))
            j["config"]["FAVOR7_PRECISION"] = p;
        write_file(path, dump(j));
    }
};

std::string manifest_path(std::string const& out) { return out + ".manifest.json"; }

/* text goes to the file (with a manifest) or to stdout */
void emit(std::string const& out, std::string const& text, Manifest& m)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    write_file(out, text);
    m.output(out, text);
    m.write(manifest_path(out));
}

Json matrix_json(FqMat const& m)
{
    Json rows = Json::array();
    for (auto const& r : m) {
        std::string t;
        for (auto x : r)
            t += (t.empty() ? "" : " ") + std::to_string(x);
        rows.push_back(t);
    }
    return rows;
}

Json rat_json(Rat r)
{
    r.canonicalize();
    return r.get_str();
}

FavorableRecord load_record(std::string const& path)
{
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (nlohmann::json::parse_error const& e) {
        throw usage_error(path + ": " + e.what());
    }
    /* a resolvent document carries the record as its parent */
    if (j.contains("parent"))
        j = j["parent"];
    return record_from_json(j);
}

/* re-verify: input records are not trusted */
FavorableRecord reverify(FavorableRecord const& r)
{
    auto v = verify_favorable_heptic(r.h);
    if (!v.accepted())
        throw rejected_input(std::string("record is not favorable: ") + rejection_name(v.reason) +
                          (v.detail.empty() ? "" : " (" + v.detail + ")"));
    return *v.record;
}

std::vector<std::string> read_lines(std::string const& path)
{
    std::istringstream in(read_file(path));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        out.push_back(line.substr(b));
    }
    return out;
}

/* a JSON record or a bare polynomial */
IntPoly poly_of_line(std::string const& line)
{
    if (line[0] == '{')
        return record_from_json(Json::parse(line)).h;
    return parse_polynomial(line);
}

int thread_count(int requested)
{
    if (requested > 0)
        return requested;
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

template <class F>
void parallel_for(size_t n, int threads, F const& f)
{
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < n;)
            f(i);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::min<int>(threads, (int)n); t++)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
}

}  // namespace

/* ---- search ---- */

int cmd_search(SearchArgs const& a)
{
    Manifest m;
    m.subcommand = "search";
    CoeffBox box;
    try {
        box = parse_box(a.box);
    } catch (std::exception const& e) {
        throw usage_error(std::string("bad --box: ") + e.what());
    }
    std::optional<Int> nmax;
    if (!a.nmax.empty()) {
        Int v;
        if (v.set_str(a.nmax, 10) != 0 || v <= 0)
            throw usage_error("bad --nmax");
        nmax = v;
    }
    m.config = {{"box", a.box}, {"nmax", a.nmax}, {"threads", thread_count(a.threads)}};
    auto recs = search_curves(box, nmax, thread_count(a.threads));
    std::string text;
    for (auto const& r : recs)
        text += record_to_json(r).dump() + "\n";
    emit(a.out, text, m);
    std::cerr << recs.size() << " favorable curves in " << box.size() << " tuples\n";
    return ok;
}

/* ---- verify-favorable ---- */

int cmd_verify(VerifyArgs const& a)
{
    Manifest m;
    m.subcommand = "verify-favorable";
    std::vector<std::string> polys = a.polys;
    if (!a.in.empty()) {
        m.input(a.in);
        for (auto const& l : read_lines(a.in))
            polys.push_back(l);
    }
    if (polys.empty())
        throw usage_error("give --poly or --in");
    bool any_rejected = false;
    std::string text;
    for (auto const& s : polys) {
        Json j;
        IntPoly h;
        try {
            h = poly_of_line(s);
        } catch (std::exception const& e) {
            throw usage_error("cannot read polynomial '" + s + "': " + e.what());
        }
        auto r = verify_favorable_heptic(h);
        j["h"] = h.to_string();
        j["accepted"] = r.accepted();
        j["reason"] = rejection_name(r.reason);
        if (!r.detail.empty())
            j["detail"] = r.detail;
        if (r.record)
            j["record"] = record_to_json(*r.record);
        any_rejected |= !r.accepted();
        text += j.dump() + "\n";
    }
    emit(a.out, text, m);
    return any_rejected ? verdict_failure : ok;
}

/* ---- resolvent ---- */

int cmd_resolvent(ResolventArgs const& a)
{
    Manifest m;
    m.subcommand = "resolvent";
    FavorableRecord rec;
    if (!a.record.empty()) {
        m.input(a.record);
        rec = reverify(load_record(a.record));
    } else if (!a.poly.empty()) {
        FavorableRecord tmp;
        tmp.h = parse_polynomial(a.poly);
        rec = reverify(tmp);
    } else {
        throw usage_error("give --record or --poly");
    }
    auto rf = make_resolvent_field(rec);
    Json j = resolvent_to_json(rf);
    j["subject"] = resolvent_subject(rf);
    j["too_real_bound"] = rat_json(too_real_bound(rf.r1_K > 0 ? rec.r1 : rec.r1));
    j["reports"] = {{"two_adic", rf.two_adic.report}, {"shape_at_N", rf.shape.report}};
    emit(a.out, dump(j), m);
    return rf.clean() ? ok : verdict_failure;
}

/* ---- honda ---- */

int cmd_honda(HondaArgs const& a)
{
    auto fam = parse_family(a.family);
    if (!fam)
        throw usage_error("unknown family '" + a.family + "'");
    auto k = residue_field(a.p);
    std::vector<Fq::elt> v;
    {
        std::stringstream ss(a.params);
        std::string item;
        while (std::getline(ss, item, ',')) {
            char* end = nullptr;
            long x = std::strtol(item.c_str(), &end, 10);
            if (!end || *end || x < 0 || x >= (long)k->size())
                throw usage_error("parameter '" + item + "' is not a code in [0, " + std::to_string(k->size()) + ")");
            v.push_back((Fq::elt)x);
        }
    }
    int simple = (fam == Family::s21 || fam == Family::s12) ? 2 : 1;
    if ((int)v.size() != simple + family_arity(*fam))
        throw usage_error("family " + a.family + " needs " + std::to_string(simple + family_arity(*fam)) +
                          " parameters");
    ExtParams P;
    P.family = *fam;
    switch (*fam) {
    case Family::s11: P.lambda = v[0]; break;
    case Family::s21: P.lambda = v[0]; P.lambda2 = v[1]; break;
    case Family::s12: P.lambda2 = v[0]; P.lambda = v[1]; break;
    case Family::s22: P.lambda2 = v[0]; break;
    }
    P.s.assign(v.begin() + simple, v.end());
    if (P.lambda == 0 || P.lambda2 == 0)
        throw usage_error("simple parameters must be nonzero");

    auto H = build_extension(k, P);
    Json j;
    j["family"] = family_name(P.family);
    j["p"] = a.p;
    j["field"] = "F_" + std::to_string(k->size()) + ", elements coded by base-p digits in 1, z, z^2";
    j["params"] = to_string(*k, P);
    j["normal_form"] = to_string(*k, normalize(*k, P));
    j["V"] = matrix_json(H.Vm);
    j["F"] = matrix_json(H.Fm);
    j["L"] = matrix_json(H.L);
    j["audit"] = H.audit().empty() ? "ok" : H.audit();

    auto desc = field_of_points_extension(P, a.p);
    Json d;
    d["kind"] = desc.kind;
    d["equation"] = desc.equation;
    d["base"] = desc.base;
    d["e_base"] = desc.e_base;
    Json vals = Json::object();
    for (auto const& [name, r] : desc.valuations)
        vals[name] = rat_json(r);
    d["ord_p"] = vals;
    if (desc.as)
        d["artin_schreier"] = {{"ord_C", rat_json(desc.as->ord_C)}, {"v_F(C)", desc.as->vF_C},
                               {"m", desc.as->m},           {"v_F(w)", desc.as->vF_w},
                               {"conductor", desc.as->conductor}, {"hypothesis_ok", desc.as->hypothesis_ok}};
    if (!desc.note.empty())
        d["note"] = desc.note;
    j["field_of_points"] = d;
    for (int t : {1, 2}) {
        auto s = field_of_points_simple(t, a.p);
        j[t == 1 ? "E1" : "E2"] = {{"equation", s.equation}, {"base", s.base}, {"note", s.note}};
    }

    auto cv = conductor_case(P, a.p);
    j["conductor"] = {{"case", cv.case_label},
                      {"value", cv.value},
                      {"exact", cv.exact},
                      {"ramification", ramification_name(cv.ramification)},
                      {"base", cv.base},
                      {"reason", cv.reason},
                      {"family_bound", cv.headline_bound},
                      {"upper_bound", conductor_upper_bound(a.p)}};
    std::cout << dump(j);
    return H.valid() ? ok : verdict_failure;
}

/* ---- local corners ---- */

int cmd_local_corners()
{
    auto const& G = unit_class_group();
    Json j;
    j["field"] = "Q_2(zeta_7, 2^(1/7))";
    j["precision"] = G.precision;
    j["unit_quotient_dim"] = G.unit_dim;
    j["group_dim"] = G.unit_dim + 1;
    j["exhaustive_log2_order"] = G.exhaustive_log2_order;
    j["basis"] = "1 + [z^j] pi^i, i = 1, 3, 5, j = 0, 1, 2; then the uniformizer class";
    j["sigma"] = G.sigma.to_string();
    j["tau"] = G.tau.to_string();
    Json gs = Json::array();
    char const* names[] = {"uniformizer", "1 + pi + pi^3", "1 + pi^3", "1 + pi^5"};
    for (int i = 0; i < 4; i++)
        gs.push_back({{"name", names[i]}, {"coordinates", G.g[i]}, {"cyclic_dim", G.cyclic_dims[i]}});
    j["generators"] = gs;
    j["square_1_plus_pi2"] = G.square_1_plus_pi2;
    j["direct_sum"] = G.direct_sum;
    auto const& c = G.corners;
    j["decomposition"] = {{"trivial", c.n_triv}, {"D", c.n_D}, {"E1", c.n1}, {"E2", c.n2}};
    j["corner_dims"] = {G.unit_corners.C1.dim(), G.unit_corners.C2.dim()};
    Json b = Json::array();
    for (auto const& e : cond4_analysis())
        b.push_back({{"a", e.a},
                     {"C2_dim", e.c2_dim},
                     {"lower_left_t2_in_C2", e.x_in_c2},
                     {"C2_upper_right_nonzero", e.upper_right_nonzero},
                     {"bound", e.bound},
                     {"reason", e.reason}});
    j["stricter_bounds"] = b;
    std::cout << dump(j);
    return ok;
}

/* ---- groups ---- */

int cmd_groups(GroupsArgs const& a)
{
    Json j;
    PermGroup S(63, iota_on_vectors());
    j["iota_S7_order"] = int_to_json(S.order());
    Json rads = Json::array();
    auto s = delta_sigma36(), t = delta_tau36();
    for (int x : {6, 14, 20, 29, 35}) {
        auto M = gamma_module(x);
        auto cd = corner_spaces(M, s, t);
        Json c2 = Json::array(), c1 = Json::array();
        for (auto v : cd.C2.basis())
            c2.push_back(F2Matrix::unflatten(6, v).to_string());
        for (auto v : cd.C1.basis())
            c1.push_back(F2Matrix::unflatten(6, v).to_string());
        rads.push_back({{"a", x},
                        {"dim", M.dim()},
                        {"generator", gamma_generator(x).to_string()},
                        {"decomposition", {{"trivial", cd.n_triv}, {"D", cd.n_D}, {"E1", cd.n1}, {"E2", cd.n2}}},
                        {"C1", c1},
                        {"C2", c2}});
    }
    j["radicals"] = rads;
    j["Gamma20_is_Gamma6_plus_Gamma14"] = gamma_module(6).sum(gamma_module(14)) == gamma_module(20);
    j["Gamma35_is_Gamma6_plus_Gamma29"] = gamma_module(6).sum(gamma_module(29)) == gamma_module(35);
    Json acts = Json::array();
    for (int x : {6, 14, 20}) {
        auto id = identify_closure_group(coset_action_42(x));
        acts.push_back({{"a", x}, {"class", closure_class_name(id.cls)}, {"detail", id.detail}});
    }
    j["actions_42"] = acts;
    Json vg = Json::array();
    for (int x : {6, 14}) {
        auto r = a.very_good ? very_good_involutions(x) : very_good_spot_check(x, 200, 1);
        vg.push_back({{"a", x},
                      {"exhaustive", r.exhaustive},
                      {"rank_d_r_minus_1", r.d_r_rank},
                      {"normal_closure_full", r.d_r_good},
                      {"candidates", r.candidates},
                      {"classes", r.classes},
                      {"outside_class", r.outside_class},
                      {"unique", r.unique()}});
    }
    j["very_good_involutions"] = vg;
    std::cout << dump(j);
    return ok;
}

/* ---- amiable ---- */

int cmd_amiable(AmiableArgs const& a)
{
    FavorableRecord rec = reverify(load_record(a.record));
    std::optional<ClassFieldCertificate> cert;
    Json j;
    auto rf = make_resolvent_field(rec);
    std::string subject = resolvent_subject(rf);
    j["subject"] = subject;
    if (!a.cert.empty()) {
        Json cj;
        try {
            cj = Json::parse(read_file(a.cert));
        } catch (nlohmann::json::parse_error const& e) {
            throw usage_error(a.cert + ": " + e.what());
        }
        cert = certificate_from_json(cj);
    }
    AmiabilityVerdict v;
    if (cert && cert->subject != subject) {
        v.verdict = Verdict::insufficient_certificate;
        v.reasons.push_back("certificate subject " + cert->subject + " does not match the resolvent");
    } else {
        v = amiability_verdict(rec, cert ? &*cert : nullptr);
    }
    j["N"] = int_to_json(rec.N);
    j["r1"] = rec.r1;
    j["result"] = verdict_to_json(v);
    std::cout << dump(j);
    return v.is_amiable() ? ok : verdict_failure;
}

/* ---- cert-template ---- */

int cmd_cert_template(CertTemplateArgs const& a)
{
    Manifest m;
    m.subcommand = "cert-template";
    m.input(a.record);
    m.config = {{"cas", a.cas}};
    FavorableRecord rec = reverify(load_record(a.record));
    auto rf = make_resolvent_field(rec);
    std::string subject = resolvent_subject(rf);
    auto w = emit_work_order(rf, subject, a.cas);
    if (a.out_dir.empty()) {
        std::cout << w.request_json << "\n" << w.script;
        return ok;
    }
    fs::create_directories(a.out_dir);
    std::string req = (fs::path(a.out_dir) / (subject + ".request.json")).string();
    std::string scr = (fs::path(a.out_dir) / (subject + (a.cas == "gp" ? ".gp" : ".m"))).string();
    write_file(req, w.request_json + "\n");
    write_file(scr, w.script);
    m.output(req, w.request_json + "\n");
    m.output(scr, w.script);
    m.write(req + ".manifest.json");
    std::cout << req << "\n" << scr << "\n";
    return ok;
}

/* ---- pipeline ---- */

namespace {

struct Outcome {
    std::string input;
    std::optional<FavorableRecord> rec;
    std::string subject;
    std::optional<AmiabilityVerdict> verdict;
    std::optional<WorkOrder> order;
    std::string error;
};

std::map<std::string, ClassFieldCertificate> load_certs(std::string const& dir, Manifest& m)
{
    std::map<std::string, ClassFieldCertificate> out;
    if (dir.empty())
        return out;
    if (!fs::is_directory(dir))
        throw usage_error("certificate directory " + dir + " not found");
    std::vector<fs::path> files;
    for (auto const& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (auto const& f : files) {
        m.input(f.string());
        auto c = certificate_from_json(Json::parse(read_file(f.string())));
        if (c.subject.empty())
            continue;
        out[c.subject] = c;
    }
    return out;
}

}  // namespace

int cmd_pipeline(PipelineArgs const& a)
{
    Manifest m;
    m.subcommand = "pipeline";
    m.input(a.records);
    Int width;
    if (width.set_str(a.bucket, 10) != 0 || width <= 0)
        throw usage_error("bad --bucket");
    m.config = {{"bucket", a.bucket}, {"certs", a.certs}};
    auto certs = load_certs(a.certs, m);
    auto lines = read_lines(a.records);
    std::vector<Outcome> res(lines.size());
    parallel_for(lines.size(), thread_count(a.threads), [&](size_t i) {
        Outcome& o = res[i];
        o.input = lines[i];
        try {
            auto v = verify_favorable_heptic(poly_of_line(lines[i]));
            if (!v.accepted()) {
                o.error = std::string("not favorable: ") + rejection_name(v.reason);
                return;
            }
            o.rec = *v.record;
            auto rf = make_resolvent_field(*o.rec);
            o.subject = resolvent_subject(rf);
            auto it = certs.find(o.subject);
            ClassFieldCertificate const* c = it == certs.end() ? nullptr : &it->second;
            o.verdict = amiability_verdict(*o.rec, c);
            if (!c && screen_necessary(*o.rec, nullptr).pass)
                o.order = emit_work_order(rf, o.subject, "gp");
        } catch (std::exception const& e) {
            o.error = e.what();
        }
    });

    fs::create_directories(a.out_dir);
    const int ncol = 10;
    std::vector<std::string> cols;
    for (int c = 0; c < ncol; c++)
        cols.push_back(std::to_string(c));
    cols.push_back(std::to_string(ncol) + "+");
    std::map<std::string, std::vector<long>> table;
    for (char const* r : {"R", "Z", "f4", "f6", "A"})
        table[r] = std::vector<long>(ncol + 1, 0);
    Json recs = Json::array();
    bool failures = false;
    for (auto const& o : res) {
        Json j;
        j["input"] = o.input;
        if (!o.error.empty()) {
            j["error"] = o.error;
            failures = true;
            recs.push_back(j);
            continue;
        }
        Int b = o.rec->N / width;
        int col = b >= ncol ? ncol : (int)b.get_si();
        j["N"] = int_to_json(o.rec->N);
        j["r1"] = o.rec->r1;
        j["subject"] = o.subject;
        j["bucket"] = cols[col];
        j["result"] = verdict_to_json(*o.verdict);
        if (o.rec->r1 <= 3)
            table["R"][col]++;
        std::string lab = verdict_label(o.verdict->verdict);
        if (lab != "-") {
            table[lab][col]++;
            table["A"][col]++;
        }
        if (o.verdict->verdict == Verdict::insufficient_certificate)
            failures = true;
        if (o.order) {
            fs::create_directories(fs::path(a.out_dir) / "work_orders");
            auto base = fs::path(a.out_dir) / "work_orders" / o.subject;
            write_file(base.string() + ".request.json", o.order->request_json + "\n");
            write_file(base.string() + ".gp", o.order->script);
            m.output(base.string() + ".request.json", o.order->request_json + "\n");
            m.output(base.string() + ".gp", o.order->script);
            j["work_order"] = (fs::path("work_orders") / (o.subject + ".request.json")).string();
        }
        recs.push_back(j);
    }
    Json tj;
    tj["bucket_width"] = a.bucket;
    tj["columns"] = cols;
    Json rows = Json::object();
    for (char const* r : {"R", "Z", "f4", "f6", "A"}) {
        auto const& v = table[r];
        long tot = 0;
        for (long x : v)
            tot += x;
        rows[r] = {{"counts", v}, {"total", tot}};
    }
    tj["rows"] = rows;
    Json report;
    report["records"] = recs;
    report["table"] = tj;
    std::string rpath = (fs::path(a.out_dir) / "report.json").string();
    report["manifest"] = "report.json.manifest.json";
    std::string rtext = dump(report);
    write_file(rpath, rtext);
    m.output(rpath, rtext);

    std::ostringstream txt;
    txt << "j   ";
    for (auto const& c : cols)
        txt << " " << std::setw(6) << c;
    txt << "  Total\n";
    for (char const* r : {"R", "Z", "f4", "f6", "A"}) {
        txt << std::left << std::setw(4) << r << std::right;
        long tot = 0;
        for (long x : table[r]) {
            txt << " " << std::setw(6) << x;
            tot += x;
        }
        txt << "  " << tot << "\n";
    }
    std::string tpath = (fs::path(a.out_dir) / "table.txt").string();
    write_file(tpath, txt.str());
    m.output(tpath, txt.str());
    m.write(rpath + ".manifest.json");
    std::cout << txt.str();
    return failures ? verdict_failure : ok;
}

/* ---- selftest ---- */

int cmd_selftest(SelftestArgs const& a)
{
    SelftestOptions opt;
    if (std::getenv("FAVOR7_PRECISION"))
        opt.precision = default_local_precision();
    if (a.mutate_gamma6) {
        F2Matrix g = gamma_generator(6);
        g.set(0, 0, !g.get(0, 0));
        opt.gamma6 = g;
    }
    bool all = true;
    for (auto const& it : run_selftest(opt)) {
        std::cout << (it.pass ? "PASS " : "FAIL ") << it.name << ": " << it.detail << " (" << std::fixed
                  << std::setprecision(2) << it.seconds << " s)\n";
        all &= it.pass;
    }
    return all ? ok : verdict_failure;
}

}  // namespace favor7::cli
