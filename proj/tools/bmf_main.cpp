#include "bmf/cli.hpp"

int main(int argc, char** argv) { return bmf::dispatch(argc, argv); }
