#include "favor7/records.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace favor7 {

std::string sha256_hex(std::string const& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw record_error("sha256 failed");
    static char const* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; i++) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw record_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(std::string const& path, std::string const& data)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw record_error("cannot write " + path);
        out << data;
        if (!out)
            throw record_error("short write to " + path);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw record_error("cannot rename " + tmp);
}

Json int_to_json(Int const& v)
{
    static Int const lim = Int(1) << 53;
    if (abs(v) < lim)
        return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(Json const& j)
{
    if (j.is_number_integer())
        return Int(j.get<long>());
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw record_error("bad integer '" + j.get<std::string>() + "'");
        return v;
    }
    throw record_error("integer expected");
}

Json poly_to_json(IntPoly const& p)
{
    Json a = Json::array();
    for (auto const& c : p.c)
        a.push_back(int_to_json(c));
    return a;
}

IntPoly poly_from_json(Json const& j)
{
    if (j.is_string())
        return parse_polynomial(j.get<std::string>());
    if (!j.is_array())
        throw record_error("polynomial expected");
    std::vector<Int> c;
    for (auto const& x : j)
        c.push_back(int_from_json(x));
    return IntPoly(c);
}

Json record_to_json(FavorableRecord const& r)
{
    Json j;
    if (r.g) {
        Json g = Json::array();
        for (long v : *r.g)
            g.push_back(v);
        j["g"] = g;
    }
    j["h"] = poly_to_json(r.h);
    j["h_text"] = r.h.to_string();
    j["N"] = int_to_json(r.N);
    j["sign"] = r.sign;
    j["disc"] = int_to_json(r.disc);
    j["r1"] = r.r1;
    j["frobenius_parity"] = r.frobenius_parity;
    j["checks"] = {{"disc_shape", r.disc_shape_ok}, {"newton", r.newton_ok}, {"prime", r.prime_ok}};
    return j;
}

FavorableRecord record_from_json(Json const& j)
{
    try {
        FavorableRecord r;
        r.h = poly_from_json(j.at("h"));
        if (j.contains("g")) {
            CurveCoeffs g{};
            if (j["g"].size() != 7)
                throw record_error("g must have 7 coefficients");
            for (int i = 0; i < 7; i++)
                g[i] = j["g"][i].get<long>();
            r.g = g;
        }
        r.N = int_from_json(j.at("N"));
        r.sign = j.value("sign", 1);
        r.disc = j.contains("disc") ? int_from_json(j["disc"]) : Int(0);
        r.r1 = j.value("r1", 0);
        r.frobenius_parity = j.value("frobenius_parity", 0);
        if (j.contains("checks")) {
            r.disc_shape_ok = j["checks"].value("disc_shape", false);
            r.newton_ok = j["checks"].value("newton", false);
            r.prime_ok = j["checks"].value("prime", false);
        }
        return r;
    } catch (nlohmann::json::exception const& e) {
        throw record_error(std::string("malformed record: ") + e.what());
    }
}

Json resolvent_to_json(ResolventField const& rf)
{
    Json j;
    j["parent"] = record_to_json(rf.parent);
    j["minpoly"] = poly_to_json(rf.resolvent.minpoly);
    j["transform"] = rf.resolvent.transform;
    j["r1_K"] = rf.r1_K;
    j["two_adic"] = {{"ok", rf.two_adic.ok},
                     {"e", rf.two_adic.e},
                     {"f", rf.two_adic.f},
                     {"polygon", rf.two_adic.polygon},
                     {"residue_factor", rf.two_adic.residue_factor}};
    j["shape_at_N"] = {{"verified", rf.shape.verified},
                       {"norm_exponents", {rf.shape.exp_a, rf.shape.exp_b}},
                       {"simple_degree", rf.shape.simple_degree},
                       {"square_degree", rf.shape.square_degree},
                       {"simple_factor_degrees", rf.shape.simple_factor_degrees},
                       {"square_factor_degrees", rf.shape.square_factor_degrees}};
    j["clean"] = rf.clean();
    return j;
}

std::string resolvent_subject(ResolventField const& rf) { return sha256_hex(dump(resolvent_to_json(rf))); }

Json certificate_to_json(ClassFieldCertificate const& c)
{
    Json j;
    j["subject"] = c.subject;
    if (c.omega_degree)
        j["omega_degree"] = *c.omega_degree;
    if (c.conductor_exponent)
        j["conductor_exponent"] = *c.conductor_exponent;
    if (c.narrow_h_odd)
        j["narrow_h_odd"] = *c.narrow_h_odd;
    if (c.closure_perm_gens) {
        Json gs = Json::array();
        for (auto const& g : *c.closure_perm_gens) {
            Json a = Json::array();
            for (int x : g.images())
                a.push_back(x + 1);
            gs.push_back(a);
        }
        j["closure_perm_gens"] = gs;
    }
    j["produced_by"] = c.produced_by;
    j["script_sha256"] = c.script_sha256;
    return j;
}

ClassFieldCertificate certificate_from_json(Json const& j)
{
    try {
        ClassFieldCertificate c;
        c.subject = j.value("subject", "");
        if (j.contains("omega_degree") && !j["omega_degree"].is_null())
            c.omega_degree = j["omega_degree"].get<int>();
        if (j.contains("conductor_exponent") && !j["conductor_exponent"].is_null())
            c.conductor_exponent = j["conductor_exponent"].get<int>();
        if (j.contains("narrow_h_odd") && !j["narrow_h_odd"].is_null())
            c.narrow_h_odd = j["narrow_h_odd"].get<bool>();
        if (j.contains("closure_perm_gens") && !j["closure_perm_gens"].is_null()) {
            std::vector<Perm> gs;
            for (auto const& a : j["closure_perm_gens"]) {
                std::vector<int> img;
                for (auto const& x : a)
                    img.push_back(x.get<int>() - 1);
                gs.emplace_back(img);
            }
            c.closure_perm_gens = gs;
        }
        if (j.contains("produced_by")) {
            auto const& p = j["produced_by"];
            if (p.is_string()) {
                c.produced_by = p.get<std::string>();
            } else {
                c.produced_by = p.value("cas", "");
                c.script_sha256 = p.value("script_sha256", "");
            }
        }
        c.script_sha256 = j.value("script_sha256", c.script_sha256);
        return c;
    } catch (nlohmann::json::exception const& e) {
        throw record_error(std::string("malformed certificate: ") + e.what());
    } catch (perm_error const& e) {
        throw record_error(std::string("malformed certificate: ") + e.what());
    }
}

Json verdict_to_json(AmiabilityVerdict const& v)
{
    Json j;
    j["verdict"] = verdict_name(v.verdict);
    j["label"] = verdict_label(v.verdict);
    j["reasons"] = v.reasons;
    if (v.closure) {
        j["closure"] = {{"class", closure_class_name(v.closure->cls)},
                        {"order", int_to_json(v.closure->order)},
                        {"detail", v.closure->detail}};
    }
    return j;
}

std::string dump(Json const& j) { return j.dump(2) + "\n"; }

}  // namespace favor7
