# Graph internals: constructions, graph6 codec, pattern search and enumeration
