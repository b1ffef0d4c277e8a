# Algebra internals: memoized minors, Gröbner engine over ZZ, common-zero search
