// Prompt preview / edit / generate / listen panel. The displayed prompt
// always comes from the server preview; edits are submitted as overrides.

import { ApiClient, pollJob } from "./api.js";
import type { JobDoc } from "./types.js";

export interface PromptPanelElements {
  promptText: HTMLTextAreaElement;
  generateButton: HTMLButtonElement;
  status: HTMLElement;
  audio: HTMLAudioElement;
}

export class PromptPanel {
  private serverPrompt = "";
  private contentKind: "levels" | "vehicles" = "levels";
  private contentId = "";

  constructor(
    private api: ApiClient,
    private el: PromptPanelElements,
    private onError: (message: string) => void
  ) {
    el.generateButton.addEventListener("click", () => void this.generate());
  }

  async showPreview(
    kind: "levels" | "vehicles",
    id: string,
    source: "programmatic" | "caption" = "programmatic"
  ): Promise<void> {
    this.contentKind = kind;
    this.contentId = id;
    try {
      const preview = await this.api.previewPrompt(kind, id, source);
      this.serverPrompt = preview.text;
      this.el.promptText.value = preview.text;
      this.el.status.textContent = `preview (${preview.kind}, ${preview.duration_s}s)`;
    } catch (err) {
      this.onError(err instanceof Error ? err.message : String(err));
    }
  }

  private async generate(): Promise<void> {
    if (!this.contentId) {
      this.onError("save the content first");
      return;
    }
    const edited = this.el.promptText.value.trim();
    const opts =
      edited && edited !== this.serverPrompt
        ? { prompt_override: edited }
        : {};
    this.el.generateButton.disabled = true;
    this.el.status.textContent = "generating…";
    try {
      const jobId =
        this.contentKind === "levels"
          ? await this.api.generateMusic(this.contentId, opts)
          : await this.api.generateSfx(this.contentId, opts);
      const job: JobDoc = await pollJob(this.api, jobId);
      if (job.status === "failed" || !job.asset_id) {
        this.onError(job.failure_reason ?? "generation failed");
        this.el.status.textContent = "failed";
        return;
      }
      this.el.audio.src = this.api.audioUrl(job.asset_id);
      this.el.audio.loop = this.contentKind === "levels";
      await this.el.audio.play().catch(() => {
        // autoplay may need a user gesture; the controls stay usable
      });
      this.el.status.textContent = `ready (${job.prompt.text})`;
    } catch (err) {
      this.onError(err instanceof Error ? err.message : String(err));
      this.el.status.textContent = "failed";
    } finally {
      this.el.generateButton.disabled = false;
    }
  }
}
