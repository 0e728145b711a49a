from midarc.cli import main

raise SystemExit(main())
