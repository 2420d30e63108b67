"""Worker-process partitioning of brute-force enumeration"""
