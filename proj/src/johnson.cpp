namespace torelli {}
