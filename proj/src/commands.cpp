#include "racklab/commands.hpp"

#include <ostream>

#include "racklab/certificate_io.hpp"
#include "racklab/cocycle.hpp"
#include "racklab/generators.hpp"
#include "racklab/rack_spec.hpp"
#include "racklab/report.hpp"

namespace racklab::cli {

namespace {

// Runs `body`, mapping library errors to exit codes.
template <class Body>
int guarded(Streams io, Body&& body) {
  try {
    return body();
  } catch (const NonMemberError& e) {
    io.err << "invalid: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

void print_certificate_summary(std::ostream& out, const TypeDCertificate& cert) {
  out << "rack " << cert.rack.to_string() << "\n";
  out << "|R| = " << cert.R.size() << ", |S| = " << cert.S.size() << "\n";
  out << "r = " << cert.r.to_string() << "\n";
  out << "s = " << cert.s.to_string() << "\n";
}

}  // namespace

int cmd_axioms(const std::string& rack, std::size_t cap, Streams io) {
  return guarded(io, [&] {
    const auto built = build_rack(parse_rack_spec(rack), cap);
    const auto report = verify_axioms(built.rack());
    io.out << rack << ": " << built.rack().size() << " elements\n";
    if (report.valid()) {
      io.out << "valid rack\n";
      return int{kOk};
    }
    io.out << "not a rack: " << report.message << "\n";
    return int{kNegative};
  });
}

int cmd_construct(const std::string& rack, std::size_t cap, Streams io) {
  return guarded(io, [&] {
    const auto built = build_rack(parse_rack_spec(rack), cap);
    const FiniteRack& r = built.rack();
    io.out << r.label() << "\n" << "size " << r.size() << "\n";
    for (ElementIndex i = 0; i < r.size(); ++i) io.out << i << " " << r.element_name(i) << "\n";
    return int{kOk};
  });
}

int cmd_prove(const ProveArgs& args, Streams io) {
  return guarded(io, [&] {
    const auto generator = parse_generator(args.name);
    if (!generator) throw ParameterError("unknown proposition '" + args.name + "'");
    int n = args.n.value_or(5);
    int t = args.t.value_or(2);
    if (*generator == Generator::iota_222) {
      n = args.n.value_or(6);
      t = args.t.value_or(2);
    }
    std::optional<Permutation> ell;
    if (args.ell) ell = Permutation::parse(*args.ell, static_cast<std::size_t>(n));
    const TypeDCertificate cert = generate(*generator, n, t, ell);
    write_certificate(args.output, cert);
    const TypeDCertificate reread = read_certificate(args.output);
    const auto verdict = verify_certificate(reread);
    if (!verdict.valid) {
      io.err << "re-verification failed: " << verdict.violation << "\n";
      return int{kNegative};
    }
    print_certificate_summary(io.out, reread);
    io.out << "certificate written to " << args.output.string() << " and re-verified\n";
    return int{kOk};
  });
}

int cmd_verify(const std::filesystem::path& path, Streams io) {
  return guarded(io, [&] {
    const TypeDCertificate cert = read_certificate(path);
    const auto verdict = verify_certificate(cert);
    if (!verdict.valid) {
      io.out << "invalid: " << verdict.violation << "\n";
      return int{kNegative};
    }
    print_certificate_summary(io.out, cert);
    io.out << "valid type D certificate\n";
    return int{kOk};
  });
}

int cmd_search(const SearchArgs& args, Streams io) {
  return guarded(io, [&] {
    const RackSpec spec = parse_rack_spec(args.rack);
    const auto built = build_rack(spec, args.cap);
    const FiniteRack& rack = built.rack();
    const auto result = decide_type_d(rack, DecideOptions{args.budget, args.threads});
    io.out << args.rack << ": " << rack.size() << " elements, " << result.pairs_examined << " ordered pairs examined\n";
    switch (result.outcome) {
      case DecideResult::Outcome::not_type_d:
        io.out << "not type D (exhaustive)\n";
        return int{kNegative};
      case DecideResult::Outcome::budget_exhausted:
        io.out << "budget exhausted, undecided\n";
        return int{kInconclusive};
      case DecideResult::Outcome::certificate:
        break;
    }
    const IndexCertificate& found = *result.certificate;
    if (!verify_index_certificate(rack, found).valid) throw Error("search produced an invalid certificate");
    if (!built.tuples) {
      io.out << "type D: r = " << rack.element_name(found.r) << ", s = " << rack.element_name(found.s)
             << ", |R| = " << found.R.size() << ", |S| = " << found.S.size() << "\n";
      if (args.output) throw ParameterError("certificate files hold tuple racks only");
      return int{kOk};
    }
    const TypeDCertificate cert = to_tuple_certificate(*built.tuples, std::get<THRackSpec>(spec), found, "search");
    print_certificate_summary(io.out, cert);
    if (args.output) {
      write_certificate(*args.output, cert);
      const auto verdict = verify_certificate(read_certificate(*args.output));
      if (!verdict.valid) {
        io.err << "re-verification failed: " << verdict.violation << "\n";
        return int{kNegative};
      }
      io.out << "certificate written to " << args.output->string() << " and re-verified\n";
    }
    io.out << "type D\n";
    return int{kOk};
  });
}

int cmd_report(const ReportArgs& args, Streams io) {
  return guarded(io, [&] {
    ReportOptions options;
    std::tie(options.n_min, options.n_max) = parse_range(args.n_range);
    std::tie(options.t_min, options.t_max) = parse_range(args.t_range);
    options.certificate_dir = args.certificate_dir;
    if (options.certificate_dir) std::filesystem::create_directories(*options.certificate_dir);
    const Report report = build_report(options);
    io.out << (args.json ? report_json(report.rows) : report_text(report.rows));
    for (const auto& failure : report.failures) io.err << "certificate failed: " << failure << "\n";
    return int{report.failures.empty() ? kOk : kNegative};
  });
}

int cmd_cocycle(const CocycleArgs& args, Streams io) {
  return guarded(io, [&] {
    const auto built = build_rack(parse_rack_spec(args.rack), 4096);
    const auto report = equivalence_sweep(built.rack(), args.m, SweepOptions{args.limit, args.sample_seed});
    io.out << args.rack << ", m = " << args.m << ": " << report.tables << " tables"
           << (report.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
    io.out << "cocycles " << report.cocycles << ", braidings " << report.braidings << "\n";
    io.out << "cocycle without braid " << report.cocycle_not_braid << ", braid without cocycle "
           << report.braid_not_cocycle << "\n";
    if (report.equivalent()) {
      io.out << "equivalence holds\n";
      return int{kOk};
    }
    io.out << "equivalence fails\n";
    return int{kNegative};
  });
}

}  // namespace racklab::cli
