#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace favor7::cli;

int main(int argc, char** argv)
{
    CLI::App app{"favor7: favorable heptics, pair resolvents, Honda systems and amiability"};
    app.require_subcommand(1);

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "search curves y^2 + y = g(x) in a coefficient box");
    search->add_option("--box", sa.box, "a0=lo:hi,...,a6=lo:hi; missing coefficients are 0")->required();
    search->add_option("--nmax", sa.nmax, "largest conductor kept");
    search->add_option("--threads", sa.threads, "worker threads (0: hardware)");
    search->add_option("--out", sa.out, "JSON Lines output (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify-favorable", "check heptics for the favorable conditions");
    verify->add_option("--poly", va.polys, "polynomial, repeatable");
    verify->add_option("--in", va.in, "JSON Lines records or one polynomial per line");
    verify->add_option("--out", va.out, "JSON Lines output (default stdout)");

    ResolventArgs ra;
    auto* resolvent = app.add_subcommand("resolvent", "pair resolvent of a favorable record with its certificates");
    resolvent->add_option("--record", ra.record, "record JSON");
    resolvent->add_option("--poly", ra.poly, "heptic polynomial");
    resolvent->add_option("--out", ra.out, "output file (default stdout)");

    HondaArgs ha;
    auto* honda = app.add_subcommand("honda", "extension of simple Honda systems: matrices, field data, conductor");
    honda->add_option("--family", ha.family, "s11, s21, s12 or s22")->required();
    honda->add_option("--params", ha.params,
                      "comma list: s11 l,s1,s2,s3; s21 l,l',s; s12 l',l,s1,s2,s3,t; s22 l',s1,s2,s3")
        ->required();
    honda->add_option("--p", ha.p, "residue characteristic")->check(CLI::IsMember({2u, 3u, 5u, 7u}));

    auto* corners = app.add_subcommand("local-corners", "unit classes of the local field and stricter bounds");

    GroupsArgs ga;
    auto* groups = app.add_subcommand("groups", "radicals Gamma_a, corners, very good involutions");
    groups->add_flag("--very-good", ga.very_good, "exhaustive involution classes for a = 6, 14");

    AmiableArgs aa;
    auto* amiable = app.add_subcommand("amiable", "amiability verdict from a record and a certificate");
    amiable->add_option("--record", aa.record, "record JSON")->required();
    amiable->add_option("--cert", aa.cert, "certificate JSON");

    CertTemplateArgs ca;
    auto* cert = app.add_subcommand("cert-template", "work order and script for the class field certificate");
    cert->add_option("--record", ca.record, "record JSON")->required();
    cert->add_option("--cas", ca.cas, "gp or magma")->check(CLI::IsMember({"gp", "magma"}));
    cert->add_option("--out-dir", ca.out_dir, "write request and script here");

    PipelineArgs pa;
    auto* pipeline = app.add_subcommand("pipeline", "verify, resolve, screen and decide a batch of records");
    pipeline->add_option("--records", pa.records, "JSON Lines records or polynomials")->required();
    pipeline->add_option("--certs", pa.certs, "directory of certificate JSON files");
    pipeline->add_option("--out-dir", pa.out_dir, "report directory")->required();
    pipeline->add_option("--bucket", pa.bucket, "conductor bucket width");
    pipeline->add_option("--threads", pa.threads, "worker threads (0: hardware)");

    SelftestArgs ta;
    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
    selftest->add_flag("--mutate-gamma6", ta.mutate_gamma6, "flip one entry of the gamma_6 generator");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }
    try {
        if (*search)
            return cmd_search(sa);
        if (*verify)
            return cmd_verify(va);
        if (*resolvent)
            return cmd_resolvent(ra);
        if (*honda)
            return cmd_honda(ha);
        if (*corners)
            return cmd_local_corners();
        if (*groups)
            return cmd_groups(ga);
        if (*amiable)
            return cmd_amiable(aa);
        if (*cert)
            return cmd_cert_template(ca);
        if (*pipeline)
            return cmd_pipeline(pa);
        if (*selftest)
            return cmd_selftest(ta);
    } catch (rejected_input const& e) {
        std::cerr << "favor7: " << e.what() << "\n";
        return verdict_failure;
    } catch (usage_error const& e) {
        std::cerr << "favor7: " << e.what() << "\n";
        return usage;
    } catch (std::exception const& e) {
        std::cerr << "favor7: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
