#ifndef SDSEQ_CLI_HPP
#define SDSEQ_CLI_HPP

namespace sdseq {

// Dispatches the subcommands (gen, lucas, classify, check, criterion, divrp,
// period, recover, sweep, identities).  Exit code 0 on success, 1 when a
// tested property is violated (sweep mismatch, failed check, failed identity),
// 2 on usage errors.
int run_cli(int argc, const char* const* argv);

}  // namespace sdseq

#endif
