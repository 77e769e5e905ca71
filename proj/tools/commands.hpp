#ifndef FAVOR7_TOOLS_COMMANDS_HPP_
#define FAVOR7_TOOLS_COMMANDS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace favor7::cli {

/* exit codes */
constexpr int ok = 0;
constexpr int verdict_failure = 1;
constexpr int usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* input that parses but fails verification */
struct rejected_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchArgs {
    std::string box;
    std::string nmax;
    int threads = 0;
    std::string out;
};
int cmd_search(SearchArgs const& a);

struct VerifyArgs {
    std::vector<std::string> polys;
    std::string in;
    std::string out;
};
int cmd_verify(VerifyArgs const& a);

struct ResolventArgs {
    std::string record;
    std::string poly;
    std::string out;
};
int cmd_resolvent(ResolventArgs const& a);

struct HondaArgs {
    std::string family;
    std::string params;
    unsigned p = 2;
};
int cmd_honda(HondaArgs const& a);

int cmd_local_corners();

struct GroupsArgs {
    bool very_good = false;
};
int cmd_groups(GroupsArgs const& a);

struct AmiableArgs {
    std::string record;
    std::string cert;
};
int cmd_amiable(AmiableArgs const& a);

struct CertTemplateArgs {
    std::string record;
    std::string cas = "gp";
    std::string out_dir;
};
int cmd_cert_template(CertTemplateArgs const& a);

struct PipelineArgs {
    std::string records;
    std::string certs;
    std::string out_dir;
    std::string bucket = "100000000";
    int threads = 0;
};
int cmd_pipeline(PipelineArgs const& a);

struct SelftestArgs {
    bool mutate_gamma6 = false;
};
int cmd_selftest(SelftestArgs const& a);

}  // namespace favor7::cli

#endif
