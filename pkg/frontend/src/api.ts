// Thin client over the server's REST surface. All game content and
// prompt text originates server-side; the UI never computes prompts.

import type {
  JobDoc,
  LevelDoc,
  PromptSpecDoc,
  SimulationDoc,
  VehicleDoc,
} from "./types.js";

export interface GenerateOptions {
  prompt_override?: string;
  seed?: number;
  melody_asset_id?: string;
}

export class ApiError extends Error {
  constructor(
    public httpStatus: number,
    public machineCode: string,
    message: string
  ) {
    super(message);
  }
}

async function jsonOrThrow(res: Response): Promise<any> {
  const body = await res.json();
  if (!res.ok) {
    const err = body?.error ?? {};
    throw new ApiError(
      res.status,
      err.machine_code ?? "unknown",
      err.message ?? `HTTP ${res.status}`
    );
  }
  return body;
}

export class ApiClient {
  constructor(private baseUrl = "") {}

  private url(path: string): string {
    return this.baseUrl + path;
  }

  async saveLevel(doc: LevelDoc): Promise<void> {
    await jsonOrThrow(
      await fetch(this.url(`/api/levels/${encodeURIComponent(doc.id)}`), {
        method: "PUT",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(doc),
      })
    );
  }

  async saveVehicle(doc: VehicleDoc): Promise<void> {
    await jsonOrThrow(
      await fetch(this.url(`/api/vehicles/${encodeURIComponent(doc.id)}`), {
        method: "PUT",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(doc),
      })
    );
  }

  async previewPrompt(
    kind: "levels" | "vehicles",
    id: string,
    source: "programmatic" | "caption" = "programmatic"
  ): Promise<PromptSpecDoc> {
    return jsonOrThrow(
      await fetch(
        this.url(
          `/api/${kind}/${encodeURIComponent(id)}/prompt?source=${source}`
        ),
        { method: "POST" }
      )
    );
  }

  async uploadCaption(contentId: string, png: Blob): Promise<string> {
    const body = await jsonOrThrow(
      await fetch(
        this.url(`/api/captions?content_id=${encodeURIComponent(contentId)}`),
        { method: "POST", body: png }
      )
    );
    return body.caption;
  }

  async generateMusic(levelId: string, opts: GenerateOptions = {}): Promise<string> {
    const body = await jsonOrThrow(
      await fetch(this.url(`/api/levels/${encodeURIComponent(levelId)}/music`), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(opts),
      })
    );
    return body.job_id;
  }

  async generateSfx(vehicleId: string, opts: GenerateOptions = {}): Promise<string> {
    const body = await jsonOrThrow(
      await fetch(this.url(`/api/vehicles/${encodeURIComponent(vehicleId)}/sfx`), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(opts),
      })
    );
    return body.job_id;
  }

  async getJob(jobId: string): Promise<JobDoc> {
    return jsonOrThrow(
      await fetch(this.url(`/api/jobs/${encodeURIComponent(jobId)}`))
    );
  }

  audioUrl(assetId: string): string {
    return this.url(`/api/audio/${encodeURIComponent(assetId)}.wav`);
  }

  async fetchAudio(assetId: string): Promise<ArrayBuffer> {
    const res = await fetch(this.audioUrl(assetId));
    if (!res.ok) throw new ApiError(res.status, "not_found", "audio missing");
    return res.arrayBuffer();
  }

  async simulate(vehicleId: string, terrainSeed: number): Promise<SimulationDoc> {
    return jsonOrThrow(
      await fetch(
        this.url(`/api/vehicles/${encodeURIComponent(vehicleId)}/simulate`),
        {
          method: "POST",
          headers: { "Content-Type": "application/json" },
          body: JSON.stringify({ terrain_seed: terrainSeed }),
        }
      )
    );
  }
}

/** Poll a job at pollMs with gentle backoff until it settles. */
export async function pollJob(
  api: ApiClient,
  jobId: string,
  pollMs = 500,
  timeoutMs = 60_000
): Promise<JobDoc> {
  const deadline = Date.now() + timeoutMs;
  let interval = pollMs;
  while (Date.now() < deadline) {
    const job = await api.getJob(jobId);
    if (job.status === "done" || job.status === "failed") return job;
    await new Promise((r) => setTimeout(r, interval));
    interval = Math.min(interval * 1.5, 4000);
  }
  throw new Error(`job ${jobId} did not settle within ${timeoutMs}ms`);
}
