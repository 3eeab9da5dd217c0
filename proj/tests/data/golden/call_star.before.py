dicts = load_crowdhuman_json(sys.argv[1], sys.argv[2], sys.argv[3])
