#include "sdseq/cli.hpp"

int main(int argc, char** argv) { return sdseq::run_cli(argc, argv); }
