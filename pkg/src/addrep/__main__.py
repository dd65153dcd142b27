from addrep.cli import entry

entry()
