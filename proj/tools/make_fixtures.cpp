/* Writes fixtures/records.jsonl and fixtures/certs/<subject>.json from
 * fixtures/large_curves.tsv.  The certificates carry the class-field data
 * implied by each row's label and say so in produced_by. */
#include "favor7/amiable.hpp"
#include "favor7/favorable.hpp"
#include "favor7/parabolic.hpp"
#include "favor7/records.hpp"
#include "favor7/resolvent.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace favor7;
namespace fs = std::filesystem;

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_fixtures FIXTURE_DIR\n";
        return 2;
    }
    fs::path dir = argv[1];
    std::istringstream in(read_file((dir / "large_curves.tsv").string()));
    std::string line, records;
    fs::create_directories(dir / "certs");
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string poly, cond, label;
        std::getline(ls, poly, '\t');
        std::getline(ls, cond, '\t');
        std::getline(ls, label, '\t');
        auto v = verify_favorable_heptic(parse_polynomial(poly));
        if (!v.accepted() || v.record->N != Int(cond)) {
            std::cerr << "row " << row << " does not verify\n";
            return 1;
        }
        records += record_to_json(*v.record).dump() + "\n";
        auto rf = make_resolvent_field(*v.record);
        std::string subject = resolvent_subject(rf);
        ClassFieldCertificate c;
        c.subject = subject;
        c.narrow_h_odd = true;
        c.conductor_exponent = label == "Z" ? 0 : label == "f4" ? 4 : 6;
        c.omega_degree = label == "Z" ? 1 : 2;
        if (label == "f4") {
            /* closure group G_6 in a relabeled 42-point action */
            std::vector<int> relabel(42);
            std::iota(relabel.begin(), relabel.end(), 0);
            std::mt19937_64 rng(1000 + row);
            std::shuffle(relabel.begin(), relabel.end(), rng);
            Perm r(relabel);
            std::vector<Perm> gens;
            for (auto const& g : coset_action_42(6))
                gens.push_back(r.inverse() * g * r);
            c.closure_perm_gens = gens;
        }
        c.script_sha256 = emit_work_order(rf, subject, "gp").script_sha256;
        c.produced_by = "fixture generator: values implied by the published label " + label +
                        ", not computed by a CAS";
        write_file((dir / "certs" / (subject + ".json")).string(), dump(certificate_to_json(c)));
        row++;
    }
    write_file((dir / "records.jsonl").string(), records);
    std::cout << row << " records\n";
    return 0;
}
