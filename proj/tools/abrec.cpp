#include "abrec/corpus.hpp"
#include "abrec/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw abrec::schema_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out)
        throw abrec::error("cannot write " + path);
    out << content;
}

std::string join_longs(const std::vector<long>& xs)
{
    std::ostringstream out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out << ", ";
        out << xs[i];
    }
    return out.str();
}

int cmd_field_info(const std::string& path)
{
    abrec::AbelianFieldSpec spec = abrec::field_spec_from_json(read_file(path));
    abrec::AbelianFieldSpec normal = abrec::normalize(spec);
    std::cout << "modulus:              " << normal.modulus() << "\n";
    std::cout << "subgroup generators:  [" << join_longs(normal.subgroup_generator_residues())
              << "]\n";
    std::cout << "conductor:            " << abrec::conductor(normal) << "\n";
    std::cout << "degree:               " << normal.degree().get_str() << "\n";
    std::cout << "|discriminant|:       " << abrec::discriminant(normal).get_str() << "\n";
    std::vector<long> conductors;
    for (const abrec::DirichletCharacter& chi : abrec::character_group(normal).characters)
        conductors.push_back(chi.conductor);
    std::cout << "character conductors: " << join_longs(conductors) << "\n";
    return kExitOk;
}

int cmd_oracle_extract(const std::string& path, long primes, const std::string& out_path)
{
    abrec::AbelianFieldSpec spec = abrec::field_spec_from_json(read_file(path));
    long bound = primes > 0 ? primes : abrec::default_prime_bound(abrec::conductor(spec));
    abrec::OracleDump dump = abrec::make_dump(spec, bound);

    long ramified = 0;
    for (const abrec::LocalDatum& d : dump.data)
        if (d.e > 1)
            ++ramified;
    std::cout << "packets:  " << dump.data.size() << " (primes up to " << bound << ")\n";
    std::cout << "ramified: " << ramified << "\n";
    for (const abrec::LocalDatum& d : dump.data)
        if (d.e > 1)
            std::cout << "  p = " << d.p << ": d = " << d.d.get_str() << ", e = "
                      << d.e.get_str() << ", f = " << d.f.get_str() << ", level (F = "
                      << d.units_level.unramified_exponent << ", k = "
                      << d.units_level.wild_exponent << ")\n";
    if (!out_path.empty()) {
        write_file(out_path, abrec::dump_to_json(dump));
        std::cout << "dump written to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_reconstruct(const std::string& path, const std::string& out_path)
{
    abrec::OracleDump dump = abrec::dump_from_json(read_file(path));
    abrec::ReconstructionReport report = abrec::reconstruct_global(dump);
    std::cout << "n_g:        " << report.n_g << "\n";
    std::cout << "subgroup:   [" << join_longs(report.subgroup_generators) << "]\n";
    std::cout << "field:      modulus " << report.field.modulus() << ", degree "
              << report.field.degree().get_str() << "\n";
    std::cout << "certified:  " << (report.certified ? "yes" : "no") << "\n";
    for (const abrec::CertificationRecord& r : report.log)
        if (!r.ok)
            std::cout << "  check failed (" << r.check << ", p = " << r.p << "): " << r.detail
                      << "\n";
    if (!out_path.empty()) {
        write_file(out_path, abrec::report_to_json(report));
        std::cout << "report written to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_verify_roundtrip(const abrec::RoundtripOptions& options)
{
    abrec::RoundtripSummary summary = abrec::run_roundtrip(options);
    abrec::print_roundtrip_table(std::cout, summary);
    return summary.all_match ? kExitOk : kExitMismatch;
}

int cmd_verify_frobenius(const abrec::FrobeniusOptions& options)
{
    abrec::FrobeniusSummary summary = abrec::run_frobenius(options);
    abrec::print_frobenius_table(std::cout, summary);
    return summary.all_ok ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"abelian number field oracle / reconstruction toolkit"};
    app.require_subcommand(1);

    // field info FILE
    CLI::App* field = app.add_subcommand("field", "inspect field specs");
    field->require_subcommand(1);
    CLI::App* info = field->add_subcommand("info", "print invariants of a field spec");
    std::string info_path;
    info->add_option("spec", info_path, "field spec JSON file")->required();

    // oracle extract FILE --primes B [-o OUT]
    CLI::App* oracle = app.add_subcommand("oracle", "ground-truth oracle");
    oracle->require_subcommand(1);
    CLI::App* extract = oracle->add_subcommand("extract", "emit per-prime local data");
    std::string extract_path, extract_out;
    long extract_primes = 0;
    extract->add_option("spec", extract_path, "field spec JSON file")->required();
    extract->add_option("--primes", extract_primes, "prime bound (default max(100, 3*conductor))");
    extract->add_option("-o,--output", extract_out, "dump output path");

    // reconstruct FILE [-o OUT]
    CLI::App* reconstruct = app.add_subcommand("reconstruct", "recover the field from a dump");
    std::string rec_path, rec_out;
    reconstruct->add_option("dump", rec_path, "oracle dump JSON file")->required();
    reconstruct->add_option("-o,--output", rec_out, "report output path");

    // verify roundtrip / verify frobenius
    CLI::App* verify = app.add_subcommand("verify", "batch verification sweeps");
    verify->require_subcommand(1);

    CLI::App* roundtrip = verify->add_subcommand(
        "roundtrip", "dump + reconstruct + compare every field up to a conductor bound");
    abrec::RoundtripOptions rt_options;
    roundtrip->add_option("--conductor-max", rt_options.conductor_max, "conductor bound")
        ->default_val(60);
    roundtrip->add_option("--primes", rt_options.prime_bound,
                          "prime bound (default max(100, 3*conductor-max))");
    roundtrip->add_option("--jobs", rt_options.jobs, "worker threads")->default_val(1);
    roundtrip->add_flag("--inject-corruption", rt_options.inject_corruption,
                        "negative control: corrupt each dump and expect failures");

    CLI::App* frobenius = verify->add_subcommand(
        "frobenius", "compare period-polynomial splitting with the localization data");
    abrec::FrobeniusOptions fr_options;
    frobenius->add_option("--conductor-max", fr_options.conductor_max, "conductor bound")
        ->default_val(40);
    frobenius->add_option("--primes", fr_options.prime_bound, "prime bound")->default_val(200);
    frobenius->add_option("--degree-cap", fr_options.degree_cap, "skip fields of larger degree")
        ->default_val(6);
    frobenius->add_option("--jobs", fr_options.jobs, "worker threads")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*info)
            return cmd_field_info(info_path);
        if (*extract)
            return cmd_oracle_extract(extract_path, extract_primes, extract_out);
        if (*reconstruct)
            return cmd_reconstruct(rec_path, rec_out);
        if (*roundtrip)
            return cmd_verify_roundtrip(rt_options);
        if (*frobenius)
            return cmd_verify_frobenius(fr_options);
    } catch (const abrec::schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const abrec::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
